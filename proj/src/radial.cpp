#include "dunkl/radial.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>

#include "dunkl/parallel.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

DunklParams::DunklParams(int n_, double gamma_) : n(n_), gamma(gamma_) {
    if (n < 1) throw Error("DunklParams: dimension n must be >= 1");
    if (gamma < 0.0) throw Error("DunklParams: gamma must be >= 0");
    v = gamma + 0.5 * n - 1.0;
}

double TailModel::value(double r) const {
    double acc = 0.0;
    for (const PowerTerm& t : terms) acc += t.amplitude * std::pow(r, t.exponent);
    return acc;
}

double TailModel::leading_exponent() const {
    double e = -std::numeric_limits<double>::infinity();
    for (const PowerTerm& t : terms) e = std::max(e, t.exponent);
    return e;
}

struct RadialProfile::Impl {
    Eigen::ArrayXd radii;
    Eigen::ArrayXd values;
    Eigen::ArrayXd log_radii;
    Eigen::ArrayXd spline_d2;  // natural cubic spline second derivatives in log r
    double origin_value = 0.0;
    bool origin_finite = true;
    std::vector<PowerTerm> origin_terms;  // continuation below r_min when singular
    TailModel tail;
};

namespace {

// natural cubic spline second derivatives (Thomas algorithm)
Eigen::ArrayXd spline_second_derivatives(const Eigen::ArrayXd& x,
                                         const Eigen::ArrayXd& y) {
    const Eigen::Index n = x.size();
    Eigen::ArrayXd d2 = Eigen::ArrayXd::Zero(n);
    if (n < 3) return d2;
    Eigen::ArrayXd u = Eigen::ArrayXd::Zero(n);
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        const double sig = (x[i] - x[i - 1]) / (x[i + 1] - x[i - 1]);
        const double p = sig * d2[i - 1] + 2.0;
        d2[i] = (sig - 1.0) / p;
        const double slope_r = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
        const double slope_l = (y[i] - y[i - 1]) / (x[i] - x[i - 1]);
        u[i] = (6.0 * (slope_r - slope_l) / (x[i + 1] - x[i - 1]) - sig * u[i - 1]) / p;
    }
    d2[n - 1] = 0.0;
    for (Eigen::Index i = n - 2; i >= 0; --i) d2[i] = d2[i] * d2[i + 1] + u[i];
    return d2;
}

double spline_eval(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y,
                   const Eigen::ArrayXd& d2, double xq) {
    const Eigen::Index n = x.size();
    const double* begin = x.data();
    const double* end = begin + n;
    Eigen::Index hi = std::upper_bound(begin, end, xq) - begin;
    if (hi <= 0) hi = 1;
    if (hi >= n) hi = n - 1;
    const Eigen::Index lo = hi - 1;
    const double h = x[hi] - x[lo];
    const double a = (x[hi] - xq) / h;
    const double b = (xq - x[lo]) / h;
    return a * y[lo] + b * y[hi] +
           ((a * a * a - a) * d2[lo] + (b * b * b - b) * d2[hi]) * h * h / 6.0;
}

void validate_samples(const Eigen::ArrayXd& radii, const Eigen::ArrayXd& values) {
    if (radii.size() != values.size())
        throw Error("RadialProfile: radii/values size mismatch");
    if (radii.size() < 4) throw Error("RadialProfile: need at least 4 samples");
    if (radii[0] <= 0.0)
        throw Error("RadialProfile: radii must be positive");
    for (Eigen::Index i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw Error("RadialProfile: radii must be strictly increasing");
    for (Eigen::Index i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i]))
            throw NonFiniteSampleError("RadialProfile: non-finite value at r = " +
                                           std::to_string(radii[i]),
                                       radii[i]);
}

// Power fit |y| ~ A r^p on log-log data, then a linear refinement with one
// correction term A r^p + B r^{p+shift}. Returns empty when the window has
// mixed signs or negligible values.
std::vector<PowerTerm> fit_power_window(const Eigen::ArrayXd& radii,
                                        const Eigen::ArrayXd& values,
                                        Eigen::Index i_begin, Eigen::Index i_end,
                                        double shift) {
    std::vector<Eigen::Index> idx;
    double sign = 0.0;
    for (Eigen::Index i = i_begin; i < i_end; ++i) {
        const double val = values[i];
        if (std::fabs(val) < 1e-280) continue;
        const double s = (val > 0.0) ? 1.0 : -1.0;
        if (sign == 0.0) sign = s;
        if (s != sign) return {};  // mixed signs: no power model
        idx.push_back(i);
    }
    if (idx.size() < 6) return {};

    // least squares on (log r, log |v|)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const Eigen::Index i : idx) {
        const double x = std::log(radii[i]);
        const double y = std::log(std::fabs(values[i]));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double m = static_cast<double>(idx.size());
    const double det = m * sxx - sx * sx;
    if (std::fabs(det) < 1e-12) return {};
    const double p = (m * sxy - sx * sy) / det;
    const double log_amp = (sy * sxx - sx * sxy) / det;
    const double amp = sign * std::exp(log_amp);

    // refinement: amplitudes of r^p and r^{p+shift} by linear least squares,
    // scaled against the leading term to keep the normal equations tame
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    const double r_ref = radii[idx.back()];
    for (const Eigen::Index i : idx) {
        const double f1 = std::pow(radii[i], p);
        const double f2 = f1 * std::pow(radii[i] / r_ref, shift);
        const double y = values[i];
        a11 += f1 * f1;
        a12 += f1 * f2;
        a22 += f2 * f2;
        b1 += f1 * y;
        b2 += f2 * y;
    }
    const double det2 = a11 * a22 - a12 * a12;
    std::vector<PowerTerm> terms;
    if (std::fabs(det2) > 1e-10 * a11 * a22) {
        const double c1 = (b1 * a22 - b2 * a12) / det2;
        const double c2 = (b2 * a11 - b1 * a12) / det2;
        if (std::isfinite(c1) && std::isfinite(c2) && std::fabs(c2) < 10.0 * std::fabs(c1)) {
            terms.push_back({c1, p});
            terms.push_back({c2 * std::pow(r_ref, -shift), p + shift});
            return terms;
        }
    }
    terms.push_back({amp, p});
    return terms;
}

}  // namespace

TailModel fit_tail(const Eigen::ArrayXd& radii, const Eigen::ArrayXd& values) {
    const Eigen::Index n = radii.size();
    const double r_hi = radii[n - 1];
    Eigen::Index i_begin = n;
    for (Eigen::Index i = 0; i < n; ++i)
        if (radii[i] >= 0.1 * r_hi) {
            i_begin = i;
            break;
        }
    TailModel tail;
    tail.terms = fit_power_window(radii, values, i_begin, n, -2.0);
    return tail;
}

RadialProfile RadialProfile::from_samples(Eigen::ArrayXd radii,
                                          Eigen::ArrayXd values,
                                          double origin_value,
                                          std::optional<TailModel> tail) {
    validate_samples(radii, values);
    if (!std::isfinite(origin_value))
        throw NonFiniteSampleError("RadialProfile: non-finite origin value", 0.0);
    auto impl = std::make_shared<Impl>();
    impl->radii = std::move(radii);
    impl->values = std::move(values);
    impl->log_radii = impl->radii.log();
    impl->spline_d2 = spline_second_derivatives(impl->log_radii, impl->values);
    impl->origin_value = origin_value;
    impl->origin_finite = true;
    impl->tail = tail ? std::move(*tail) : fit_tail(impl->radii, impl->values);
    RadialProfile p;
    p.impl_ = std::move(impl);
    return p;
}

RadialProfile RadialProfile::from_samples_singular_origin(
    Eigen::ArrayXd radii, Eigen::ArrayXd values, std::optional<TailModel> tail) {
    validate_samples(radii, values);
    auto impl = std::make_shared<Impl>();
    impl->radii = std::move(radii);
    impl->values = std::move(values);
    impl->log_radii = impl->radii.log();
    impl->spline_d2 = spline_second_derivatives(impl->log_radii, impl->values);
    // near-origin power-law continuation fitted on the first decade
    const Eigen::Index n = impl->radii.size();
    Eigen::Index i_end = 1;
    while (i_end < n && impl->radii[i_end] <= 10.0 * impl->radii[0]) ++i_end;
    impl->origin_terms = fit_power_window(impl->radii, impl->values, 0, i_end, 2.0);
    if (impl->origin_terms.empty())
        impl->origin_terms.push_back({impl->values[0], 0.0});
    impl->origin_finite = false;
    impl->origin_value =
        (impl->values[0] >= 0.0 ? 1.0 : -1.0) * std::numeric_limits<double>::infinity();
    impl->tail = tail ? std::move(*tail) : fit_tail(impl->radii, impl->values);
    RadialProfile p;
    p.impl_ = std::move(impl);
    return p;
}

double RadialProfile::operator()(double r) const {
    const Impl& im = *impl_;
    if (r < 0.0) throw Error("RadialProfile: negative radius");
    if (r == 0.0) return im.origin_value;
    if (r < im.radii[0]) {
        if (im.origin_finite) {
            const double w = r / im.radii[0];
            return im.origin_value + (im.values[0] - im.origin_value) * w;
        }
        double acc = 0.0;
        for (const PowerTerm& t : im.origin_terms)
            acc += t.amplitude * std::pow(r, t.exponent);
        return acc;
    }
    const Eigen::Index n = im.radii.size();
    if (r > im.radii[n - 1]) {
        return im.tail.present() ? im.tail.value(r) : 0.0;
    }
    return spline_eval(im.log_radii, im.values, im.spline_d2, std::log(r));
}

const Eigen::ArrayXd& RadialProfile::radii() const { return impl_->radii; }
const Eigen::ArrayXd& RadialProfile::values() const { return impl_->values; }
double RadialProfile::origin_value() const { return impl_->origin_value; }
bool RadialProfile::origin_is_finite() const { return impl_->origin_finite; }
const TailModel& RadialProfile::tail() const { return impl_->tail; }
double RadialProfile::r_min() const { return impl_->radii[0]; }
double RadialProfile::r_max() const { return impl_->radii[impl_->radii.size() - 1]; }

double RadialProfile::origin_exponent() const {
    const Impl& im = *impl_;
    if (im.origin_finite) return 0.0;
    double e = std::numeric_limits<double>::infinity();
    for (const PowerTerm& t : im.origin_terms) e = std::min(e, t.exponent);
    return e;
}

Eigen::ArrayXd make_log_grid(const GridSpec& grid) {
    if (!(grid.r_min > 0.0) || !(grid.r_max > grid.r_min) || grid.count < 16)
        throw Error("GridSpec: need 0 < r_min < r_max and count >= 16");
    Eigen::ArrayXd radii(grid.count);
    const double lo = std::log(grid.r_min);
    const double hi = std::log(grid.r_max);
    for (int i = 0; i < grid.count; ++i)
        radii[i] = std::exp(lo + (hi - lo) * i / (grid.count - 1.0));
    radii[0] = grid.r_min;
    radii[grid.count - 1] = grid.r_max;
    return radii;
}

RadialProfile sample_profile(const RealFn& F, const DunklParams&,
                             const GridSpec& grid,
                             std::optional<TailModel> tail_override) {
    const Eigen::ArrayXd radii = make_log_grid(grid);
    Eigen::ArrayXd values(radii.size());
    for (Eigen::Index i = 0; i < radii.size(); ++i) {
        values[i] = F(radii[i]);
        if (!std::isfinite(values[i]))
            throw NonFiniteSampleError(
                "sample_profile: non-finite sample at r = " + std::to_string(radii[i]),
                radii[i]);
    }
    const double origin = F(0.0);
    if (!std::isfinite(origin))
        throw NonFiniteSampleError("sample_profile: non-finite sample at r = 0", 0.0);
    return RadialProfile::from_samples(std::move(radii), std::move(values), origin,
                                       std::move(tail_override));
}

double hankel_point(const RealFn& F, const DunklParams& params, double r,
                    double abs_tol, const QuadOptions& opt) {
    return hankel_point_integral(F, params.v, r, 0.0, abs_tol, opt).value;
}

double eval_at_origin_fn(const RealFn& F, const DunklParams& params,
                         const QuadOptions& opt) {
    const double v = params.v;
    const double c = std::pow(2.0, -v) * reciprocal_gamma(v + 1.0);
    auto integrand = [&](double s) { return F(s) * std::pow(s, 2.0 * v + 1.0); };
    return c * integrate_semi_infinite(integrand, 0.0, opt).value;
}

RadialProfile hankel_transform(const RealFn& F, const DunklParams& params,
                               const GridSpec& out, OriginPolicy origin_policy,
                               const QuadOptions& opt,
                               std::optional<TailModel> tail_override) {
    const Eigen::ArrayXd radii = make_log_grid(out);
    Eigen::ArrayXd values(radii.size());
    parallel_for(static_cast<std::size_t>(radii.size()), [&](std::size_t i) {
        try {
            values[i] =
                hankel_point_integral(F, params.v, radii[i], 0.0, opt.abs_tol, opt)
                    .value;
        } catch (const NonConvergenceError& e) {
            throw NonConvergenceError("hankel: quadrature did not converge at r = " +
                                          std::to_string(radii[i]),
                                      e.best);
        }
    });
    if (origin_policy == OriginPolicy::compute) {
        const double origin = eval_at_origin_fn(F, params, opt);
        return RadialProfile::from_samples(radii, std::move(values), origin,
                                           std::move(tail_override));
    }
    return RadialProfile::from_samples_singular_origin(radii, std::move(values),
                                                       std::move(tail_override));
}

namespace {

// Oscillatory panel sums stay summable (after Aitken) while the integrand
// envelope |F| s^{v+1/2} grows slower than ~s^0.45.
void check_transformable(const RadialProfile& F, const DunklParams& params) {
    if (F.tail().present()) {
        const double e = F.tail().leading_exponent();
        if (e + params.v + 0.5 >= 0.45)
            throw NonIntegrableProfileError(
                "hankel: tail exponent " + std::to_string(e) +
                " too heavy for order v = " + std::to_string(params.v));
    }
    if (!F.origin_is_finite()) {
        if (F.origin_exponent() + 2.0 * params.v + 2.0 <= 0.0)
            throw NonIntegrableProfileError(
                "hankel: profile not integrable at the origin");
    }
}

bool origin_integrable(const RadialProfile& F, const DunklParams& params) {
    if (!F.tail().present()) return true;
    return F.tail().leading_exponent() + 2.0 * params.v + 1.0 < -1.0;
}

}  // namespace

RadialProfile hankel(const RadialProfile& F, const DunklParams& params,
                     const GridSpec& out, const QuadOptions& opt) {
    check_transformable(F, params);
    const OriginPolicy policy = origin_integrable(F, params)
                                    ? OriginPolicy::compute
                                    : OriginPolicy::singular;
    RealFn f = [F](double s) { return F(s); };
    return hankel_transform(f, params, out, policy, opt);
}

RadialProfile hankel(const RadialProfile& F, const DunklParams& params) {
    GridSpec out;
    out.r_min = F.r_min();
    out.r_max = F.r_max();
    out.count = static_cast<int>(F.radii().size());
    return hankel(F, params, out);
}

double eval_at_origin(const RadialProfile& F, const DunklParams& params,
                      const QuadOptions& opt) {
    if (!origin_integrable(F, params))
        throw NonIntegrableProfileError(
            "eval_at_origin: tail not integrable against s^{2v+1}");
    RealFn f = [F](double s) { return F(s); };
    return eval_at_origin_fn(f, params, opt);
}

double weighted_norm(const RadialProfile& F, double p, const DunklParams& params,
                     const QuadOptions& opt) {
    if (!(p >= 1.0)) throw Error("weighted_norm: requires p >= 1");
    const double d = params.weight_degree();

    if (std::isinf(p)) {
        if (!F.origin_is_finite())
            throw DivergentNormError("weighted_norm: profile unbounded at origin");
        if (F.tail().present() && F.tail().leading_exponent() > 0.0)
            throw DivergentNormError("weighted_norm: tail unbounded");
        double sup = std::fabs(F.origin_value());
        sup = std::max(sup, F.values().abs().maxCoeff());
        return sup;
    }

    // divergence checks from the origin and tail models
    if (!F.origin_is_finite() && p * F.origin_exponent() + d <= 0.0)
        throw DivergentNormError("weighted_norm: divergent at the origin");
    if (F.tail().present() && p * F.tail().leading_exponent() + d >= 0.0)
        throw DivergentNormError("weighted_norm: tail implies divergence");

    auto integrand = [&](double r) {
        return std::pow(std::fabs(F(r)), p) * std::pow(r, d - 1.0);
    };
    const QuadOptions qo = opt;
    const double total = integrate_semi_infinite(integrand, 0.0, qo).value;
    return std::pow(total, 1.0 / p);
}

void write_profile_csv(const std::string& path, const RadialProfile& profile,
                       bool timestamp) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "# dunklpot profile\n";
    if (timestamp) {
        const std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        out << "# written: " << buf << "\n";
    }
    char line[128];
    if (profile.origin_is_finite()) {
        std::snprintf(line, sizeof(line), "# origin=%.17g\n", profile.origin_value());
        out << line;
    }
    out << "r,value\n";
    for (Eigen::Index i = 0; i < profile.radii().size(); ++i) {
        std::snprintf(line, sizeof(line), "%.17g,%.17g\n", profile.radii()[i],
                      profile.values()[i]);
        out << line;
    }
    if (!out) throw IoError("write failed: " + path);
}

RadialProfile read_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::vector<double> radii, values;
    double origin = std::numeric_limits<double>::quiet_NaN();
    bool have_origin = false;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("origin=");
            if (pos != std::string::npos) {
                origin = std::strtod(line.c_str() + pos + 7, nullptr);
                have_origin = true;
            }
            continue;
        }
        if (!header_seen) {
            if (line.rfind("r,", 0) == 0) {
                header_seen = true;
                continue;
            }
            header_seen = true;  // header optional
        }
        std::istringstream row(line);
        std::string a, b;
        if (!std::getline(row, a, ',') || !std::getline(row, b))
            throw IoError("malformed profile row: " + line);
        radii.push_back(std::strtod(a.c_str(), nullptr));
        values.push_back(std::strtod(b.c_str(), nullptr));
    }
    if (radii.size() < 4) throw IoError("profile file too short: " + path);
    Eigen::ArrayXd r = Eigen::Map<Eigen::ArrayXd>(radii.data(), radii.size());
    Eigen::ArrayXd val = Eigen::Map<Eigen::ArrayXd>(values.data(), values.size());
    for (Eigen::Index i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1]))
            throw IoError("profile radii not strictly increasing: " + path);
    if (!have_origin) origin = val[0];
    return RadialProfile::from_samples(std::move(r), std::move(val), origin);
}

}  // namespace dunkl
