#pragma once

#include "dunkl/radial.hpp"

namespace dunkl {

/// Fractional-power heat family: spectral symbol exp(-t r^beta). beta = 2 is
/// the heat semigroup, beta = 1 the Poisson semigroup.
struct SemigroupSpec {
    double beta;
    double t;
    DunklParams params;

    SemigroupSpec(double beta_, double t_, DunklParams params_);
};

/// Closed-form kernel for beta in {1, 2}:
///   beta = 2: (2t)^{-(v+1)} exp(-r^2/(4t))
///   beta = 1: 2^{v+1} Gamma(v+3/2)/sqrt(pi) * t (t^2+r^2)^{-(v+3/2)}
/// Throws UnsupportedBetaError otherwise.
double kernel_closed_form(const SemigroupSpec& spec, double r);

/// Large-r expansion of the kernel,
///   W(r) ~ sum_{k>=1} c_k r^{-(2v+2+k beta)},
///   c_k = ((-t)^k/k!) 2^{k beta+v+1} Gamma(v+1+k beta/2) / Gamma(-k beta/2),
/// truncated at the smallest useful term. Empty for even integer beta
/// (all coefficients vanish; the kernel decays faster than any power).
TailModel kernel_tail_series(const SemigroupSpec& spec, double r_start,
                             int max_terms = 12);

/// Kernel profile. Closed form for beta in {1, 2}, quadrature otherwise;
/// both carry the analytic tail expansion.
RadialProfile kernel_profile(const SemigroupSpec& spec, const GridSpec& grid);

/// Quadrature route for any beta (cross-validation of the closed forms).
RadialProfile kernel_profile_quadrature(const SemigroupSpec& spec,
                                        const GridSpec& grid,
                                        const QuadOptions& opt = {});

/// Spectral-multiplier application: hankel(exp(-t r^beta) * hankel(f)).
RadialProfile apply_semigroup(const RadialProfile& f, const SemigroupSpec& spec,
                              const QuadOptions& opt = {});

/// Least-squares slope of log|F| vs log r over [r_lo, r_hi] using the grid
/// samples in the window. Throws SignChangeInWindowError when |F| crosses
/// zero there.
double tail_slope(const RadialProfile& F, double r_lo, double r_hi);

}  // namespace dunkl
