#include "dunkl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

// G7,K15 nodes and weights on [-1,1] (QUADPACK values).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526, 0.949107912342758524526189684048,
    0.864864423359769072789712788641, 0.741531185599394439863864773281,
    0.586087235467691130294144838259, 0.405845151377397166906606412077,
    0.207784955007898467600689403773, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008059, 0.063092092629978553290700663189,
    0.104790010322250183839876322541, 0.140653259715525918745189590510,
    0.169004726639267902826583426599, 0.190350578064785409913256402421,
    0.204432940075298892414161999234, 0.209482141084727828012999174892};
constexpr double kWg[4] = {
    0.129484966168869693270611432679, 0.279705391489276667901467771424,
    0.381830050505118944950369775489, 0.417959183673469387755102040816};

struct Panel {
    double a, b;
    double value;
    double error;
};

// One (G7,K15) rule application with QUADPACK-style error estimate.
Panel gk15(const RealFn& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    const double fc = f(c);
    fv[14] = fc;
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        fv[2 * i] = f1;
        fv[2 * i + 1] = f2;
        resk += kWgk[i] * (f1 + f2);
        resabs += kWgk[i] * (std::fabs(f1) + std::fabs(f2));
        if (i % 2 == 1) resg += kWg[i / 2] * (f1 + f2);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] *
                  (std::fabs(fv[2 * i] - mean) + std::fabs(fv[2 * i + 1] - mean));
    resasc *= h;
    resabs *= h;
    const double value = resk * h;
    double err = std::fabs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double tiny = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
    err = std::max(err, tiny);
    return Panel{a, b, value, err};
}

}  // namespace

QuadratureResult integrate_finite(const RealFn& f, double a, double b,
                                  double abs_tol, double rel_tol,
                                  std::int64_t budget) {
    if (!(a < b)) throw Error("integrate_finite: requires a < b");
    std::vector<Panel> heap;
    heap.push_back(gk15(f, a, b));
    std::int64_t evals = 15;
    double total = heap[0].value;
    double total_err = heap[0].error;
    auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };

    while (total_err > std::max(abs_tol, rel_tol * std::fabs(total))) {
        if (evals + 30 > budget || heap.size() > 10000) {
            QuadratureResult best{total, total_err, evals};
            throw NonConvergenceError("integrate_finite: tolerance not met within budget",
                                      best);
        }
        std::pop_heap(heap.begin(), heap.end(), worse);
        Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            // interval at machine resolution; accept its estimate
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end(), worse);
            break;
        }
        Panel left = gk15(f, worst.a, mid);
        Panel right = gk15(f, mid, worst.b);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), worse);
    }
    // recompute sums to shed accumulated cancellation in the running totals
    total = 0.0;
    total_err = 0.0;
    for (const Panel& p : heap) {
        total += p.value;
        total_err += p.error;
    }
    return QuadratureResult{total, total_err, evals};
}

QuadratureResult integrate_semi_infinite(const RealFn& f, double a,
                                         const QuadOptions& opt) {
    double sum = 0.0, err = 0.0;
    std::int64_t evals = 0;
    double lo = a;
    double width = std::max(1.0, 0.5 * std::fabs(a));
    double prev = std::numeric_limits<double>::quiet_NaN();
    double prev2 = std::numeric_limits<double>::quiet_NaN();
    const double panel_tol = 0.05 * opt.abs_tol;
    for (int k = 0; k < 200; ++k) {
        const double hi = lo + width;
        QuadratureResult p;
        try {
            p = integrate_finite(f, lo, hi, panel_tol, opt.rel_tol,
                                 opt.budget - evals);
        } catch (const NonConvergenceError& e) {
            QuadratureResult best{sum + e.best.value, err + e.best.error,
                                  evals + e.best.evaluations};
            throw NonConvergenceError("integrate_semi_infinite: panel failed", best);
        }
        sum += p.value;
        err += p.error;
        evals += p.evaluations;
        const double contrib = std::fabs(p.value);
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::fabs(sum));
        if (std::isfinite(prev) && std::isfinite(prev2)) {
            if (contrib < 0.05 * tol && prev < 0.05 * tol) {
                return QuadratureResult{sum, err + contrib, evals};
            }
            // stable-ratio tail: add geometric remainder
            if (prev > 0.0 && contrib > 0.0 && prev2 > 0.0) {
                const double rho1 = contrib / prev;
                const double rho2 = prev / prev2;
                if (rho1 < 0.9 && std::fabs(rho1 - rho2) < 0.05 * rho1) {
                    const double rem = contrib * rho1 / (1.0 - rho1);
                    if (rem < 0.5 * tol)
                        return QuadratureResult{sum + rem, err + 0.5 * rem, evals};
                }
            }
        }
        prev2 = prev;
        prev = contrib;
        lo = hi;
        width *= 2.0;
    }
    QuadratureResult best{sum, err, evals};
    throw NonConvergenceError("integrate_semi_infinite: no decay detected", best);
}

namespace {

// Iterated Aitken delta-squared over the partial sums; returns the deepest
// stable value and a crude error estimate from the last two levels.
struct AitkenAccel {
    std::vector<double> partial;

    void push(double s) { partial.push_back(s); }

    std::pair<double, double> estimate() const {
        if (partial.empty()) return {0.0, 0.0};
        std::vector<double> cur = partial;
        double best = cur.back();
        double prev_best = best;
        for (int level = 0; level < 12 && cur.size() >= 3; ++level) {
            std::vector<double> nxt;
            nxt.reserve(cur.size() - 2);
            for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
                const double d1 = cur[i + 1] - cur[i];
                const double d2 = cur[i + 2] - cur[i + 1];
                const double den = d2 - d1;
                if (den == 0.0 || !std::isfinite(den)) {
                    nxt.push_back(cur[i + 2]);
                } else {
                    nxt.push_back(cur[i + 2] - d2 * d2 / den);
                }
            }
            prev_best = best;
            best = nxt.back();
            cur = std::move(nxt);
        }
        return {best, std::fabs(best - prev_best)};
    }
};

}  // namespace

namespace {

QuadratureResult bessel_panel_engine(const RealFn& integrand, double v, double r,
                                     double s0, double abs_tol,
                                     const QuadOptions& opt) {
    if (r <= 0.0) throw Error("bessel tail: requires r > 0");
    if (v < -0.5) throw UnsupportedOrderError("bessel tail: order below -1/2");
    if (s0 < 0.0) throw Error("bessel tail: requires s0 >= 0");

    std::int64_t evals = 0;
    double quad_err = 0.0;
    const double panel_tol = std::max(0.02 * abs_tol, 1e-300);

    auto panel_value = [&](double a, double b) {
        QuadratureResult p =
            integrate_finite(integrand, a, b, panel_tol, 1e-12, opt.budget - evals);
        evals += p.evaluations;
        quad_err += p.error_estimate;
        return p.value;
    };

    // non-oscillatory head: geometric sub-panels up to the oscillation onset
    const double osc_onset = (v + 2.0) / r;
    double head = 0.0;
    double lo = s0;
    {
        double step = std::max(osc_onset / 64.0, 1e-7);
        if (lo > 0.0) step = std::max(step, lo);
        while (lo < osc_onset) {
            const double hi = std::min(lo + step, osc_onset);
            head += panel_value(lo, hi);
            lo = hi;
            step *= 2.0;
        }
    }

    // oscillatory panels bracketed by estimated zeros of J_v(r s)
    AitkenAccel accel;
    double plain = head;
    accel.push(plain);
    int m = 1;
    while (bessel_zero_estimate(v, m) / r <= lo && m < 1000000) ++m;

    double prev_contrib = std::numeric_limits<double>::quiet_NaN();
    int small_count = 0;
    int stable_count = 0;
    int grow_count = 0;
    int alternations = 0, panels_done = 0;
    double last_estimate = plain;

    for (int k = 0; k < opt.max_panels; ++k) {
        const double hi = bessel_zero_estimate(v, m) / r;
        ++m;
        if (hi <= lo) continue;
        double contrib;
        try {
            contrib = panel_value(lo, hi);
        } catch (const NonConvergenceError&) {
            QuadratureResult best{last_estimate, quad_err, evals};
            throw NonConvergenceError(
                "bessel tail: panel quadrature exhausted budget", best);
        }
        lo = hi;
        plain += contrib;
        accel.push(plain);
        ++panels_done;

        if (std::isfinite(prev_contrib)) {
            if (contrib * prev_contrib < 0.0) ++alternations;
            if (std::fabs(contrib) > 10.0 * std::fabs(prev_contrib) &&
                std::fabs(contrib) > 1e3 * abs_tol) {
                if (++grow_count >= 10)
                    throw EnvelopeViolationError(
                        "bessel tail: integrand envelope grows");
            } else {
                grow_count = 0;
            }
        }

        const bool alternating = panels_done >= 6 && alternations >= (4 * panels_done) / 5;

        if (std::fabs(contrib) < 0.02 * abs_tol) {
            if (++small_count >= 2) {
                const auto [est, aerr] = accel.estimate();
                const double val = alternating ? est : plain;
                return QuadratureResult{val, quad_err + std::fabs(contrib) + aerr,
                                        evals};
            }
        } else {
            small_count = 0;
        }

        if (alternating && panels_done >= 8) {
            const auto [est, aerr] = accel.estimate();
            if (std::fabs(est - last_estimate) < 0.3 * abs_tol && aerr < abs_tol) {
                if (++stable_count >= 2)
                    return QuadratureResult{est, quad_err + aerr, evals};
            } else {
                stable_count = 0;
            }
            last_estimate = est;
        }
        prev_contrib = contrib;
    }

    const auto [est, aerr] = accel.estimate();
    if (aerr < abs_tol)
        return QuadratureResult{est, quad_err + aerr, evals};
    QuadratureResult best{est, quad_err + aerr, evals};
    throw NonConvergenceError("bessel tail: panel cap reached", best);
}

}  // namespace

QuadratureResult integrate_bessel_tail(const RealFn& F, double v, double r,
                                       double s0, double abs_tol,
                                       const QuadOptions& opt) {
    auto integrand = [&](double s) {
        return F(s) * bessel_j(v, r * s) * std::pow(s, v + 1.0);
    };
    return bessel_panel_engine(integrand, v, r, s0, abs_tol, opt);
}

QuadratureResult hankel_point_integral(const RealFn& F, double v, double r,
                                       double s0, double abs_tol,
                                       const QuadOptions& opt) {
    auto integrand = [&](double s) {
        return F(s) * bessel_j_scaled(v, r * s) * std::pow(s, 2.0 * v + 1.0);
    };
    return bessel_panel_engine(integrand, v, r, s0, abs_tol, opt);
}

}  // namespace dunkl
