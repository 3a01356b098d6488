#pragma once

#include "dunkl/errors.hpp"

namespace dunkl {

/// Gamma function for real argument, Lanczos approximation with reflection
/// for x < 1/2. Relative error below 1e-12 on [-30, 170].
/// Throws PoleError at non-positive integers, OverflowError when the result
/// is not representable.
double gamma_fn(double x);

/// 1/Gamma(x); zero at the poles of Gamma, finite everywhere else.
double reciprocal_gamma(double x);

/// sin(pi*x) with exact argument reduction, accurate near integers.
double sin_pi(double x);

/// Bessel function of the first kind J_v(x) for real order v >= -1/2 and
/// x >= 0. Power series for small arguments, Hankel asymptotics for the
/// fractional base orders at large argument, recurrence in the stable
/// direction for v > 3/2. Absolute error ~1e-10 for x <= 1e3, v <= 50.
double bessel_j(double v, double x);

/// J_v(z) / z^v, finite and nonzero at z = 0 (equals 2^{-v}/Gamma(v+1)
/// there). Uniformly well-scaled in v; used by the transform engine.
double bessel_j_scaled(double v, double z);

/// m-th positive zero of J_v, McMahon expansion. Used only to bracket sign
/// changes when partitioning oscillatory integrals.
double bessel_zero_estimate(double v, int m);

}  // namespace dunkl
