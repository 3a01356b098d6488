#include "dunkl/semigroup.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

SemigroupSpec::SemigroupSpec(double beta_, double t_, DunklParams params_)
    : beta(beta_), t(t_), params(params_) {
    if (!(beta > 0.0)) throw Error("SemigroupSpec: beta must be > 0");
    if (!(t > 0.0)) throw Error("SemigroupSpec: t must be > 0");
}

double kernel_closed_form(const SemigroupSpec& spec, double r) {
    const double v = spec.params.v;
    const double t = spec.t;
    if (spec.beta == 2.0) {
        return std::pow(2.0 * t, -(v + 1.0)) * std::exp(-r * r / (4.0 * t));
    }
    if (spec.beta == 1.0) {
        const double c = std::pow(2.0, v + 1.0) * gamma_fn(v + 1.5) / std::sqrt(kPi);
        return c * t * std::pow(t * t + r * r, -(v + 1.5));
    }
    throw UnsupportedBetaError("kernel_closed_form: no closed form for beta = " +
                               std::to_string(spec.beta));
}

TailModel kernel_tail_series(const SemigroupSpec& spec, double r_start,
                             int max_terms) {
    const double v = spec.params.v;
    const double beta = spec.beta;
    const double t = spec.t;
    TailModel tail;
    double prev_mag = std::numeric_limits<double>::max();
    double sign = -1.0;  // (-t)^k starting at k=1
    double tk = t;
    double kfact = 1.0;
    for (int k = 1; k <= max_terms; ++k) {
        const double rg = reciprocal_gamma(-0.5 * k * beta);
        const double c = sign * tk / kfact * std::pow(2.0, k * beta + v + 1.0) *
                         gamma_fn(v + 1.0 + 0.5 * k * beta) * rg;
        const double mag = std::fabs(c) * std::pow(r_start, -(2.0 * v + 2.0 + k * beta));
        if (c != 0.0) {
            if (mag >= prev_mag) break;  // asymptotic series: stop at min term
            tail.terms.push_back({c, -(2.0 * v + 2.0 + k * beta)});
            prev_mag = mag;
        }
        sign = -sign;
        tk *= t;
        kfact *= (k + 1.0);
    }
    return tail;
}

RadialProfile kernel_profile(const SemigroupSpec& spec, const GridSpec& grid) {
    if (spec.beta == 1.0 || spec.beta == 2.0) {
        auto F = [&](double r) { return kernel_closed_form(spec, r); };
        return sample_profile(F, spec.params, grid,
                              kernel_tail_series(spec, grid.r_max));
    }
    return kernel_profile_quadrature(spec, grid);
}

RadialProfile kernel_profile_quadrature(const SemigroupSpec& spec,
                                        const GridSpec& grid,
                                        const QuadOptions& opt) {
    const double t = spec.t;
    const double beta = spec.beta;
    RealFn symbol = [t, beta](double s) { return std::exp(-t * std::pow(s, beta)); };
    return hankel_transform(symbol, spec.params, grid, OriginPolicy::compute, opt,
                            kernel_tail_series(spec, grid.r_max));
}

RadialProfile apply_semigroup(const RadialProfile& f, const SemigroupSpec& spec,
                              const QuadOptions& opt) {
    GridSpec out;
    out.r_min = f.r_min();
    out.r_max = f.r_max();
    out.count = static_cast<int>(f.radii().size());
    const RadialProfile fhat = hankel(f, spec.params, out, opt);
    const double t = spec.t;
    const double beta = spec.beta;
    RealFn g = [fhat, t, beta](double s) {
        return std::exp(-t * std::pow(s, beta)) * fhat(s);
    };
    return hankel_transform(g, spec.params, out, OriginPolicy::compute, opt);
}

double tail_slope(const RadialProfile& F, double r_lo, double r_hi) {
    if (!(r_lo > 0.0 && r_hi > r_lo))
        throw Error("tail_slope: need 0 < r_lo < r_hi");
    if (r_lo < F.r_min() || r_hi > F.r_max())
        throw Error("tail_slope: window outside the grid");
    const Eigen::ArrayXd& radii = F.radii();
    const Eigen::ArrayXd& values = F.values();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    double sign = 0.0;
    for (Eigen::Index i = 0; i < radii.size(); ++i) {
        if (radii[i] < r_lo || radii[i] > r_hi) continue;
        const double val = values[i];
        if (val == 0.0)
            throw SignChangeInWindowError("tail_slope: zero value in window");
        const double s = (val > 0.0) ? 1.0 : -1.0;
        if (sign == 0.0) sign = s;
        if (s != sign)
            throw SignChangeInWindowError("tail_slope: |F| crosses zero in window");
        const double x = std::log(radii[i]);
        const double y = std::log(std::fabs(val));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++m;
    }
    if (m < 3) throw Error("tail_slope: fewer than 3 grid points in window");
    const double det = m * sxx - sx * sx;
    return (m * sxy - sx * sy) / det;
}

}  // namespace dunkl
