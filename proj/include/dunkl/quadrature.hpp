#pragma once

#include <cstdint>
#include <functional>

#include "dunkl/errors.hpp"

namespace dunkl {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;  // absolute
    std::int64_t evaluations = 0;
};

struct NonConvergenceError : Error {
    NonConvergenceError(const std::string& msg, QuadratureResult best_)
        : Error(msg), best(best_) {}
    QuadratureResult best;
};

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    std::int64_t budget = 200000;  // function evaluations per integral
    int max_panels = 700;          // oscillatory panels in Bessel tails
};

using RealFn = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. Splits the worst interval until
/// the summed error estimate meets max(abs_tol, rel_tol*|value|).
/// Throws NonConvergenceError (carrying the best estimate) on budget
/// exhaustion.
QuadratureResult integrate_finite(const RealFn& f, double a, double b,
                                  double abs_tol = 1e-10, double rel_tol = 1e-8,
                                  std::int64_t budget = 200000);

/// Adaptive integral over [a, inf): geometrically growing panels, each
/// handled by integrate_finite, with a geometric-remainder correction when
/// panel contributions settle into a stable ratio.
QuadratureResult integrate_semi_infinite(const RealFn& f, double a,
                                         const QuadOptions& opt = {});

/// Oscillatory Hankel-type tail: evaluates
///     int_{s0}^inf F(s) J_v(r s) s^{v+1} ds
/// by partitioning at estimated zeros of J_v(r .) and accelerating the
/// alternating partial sums with iterated Aitken; falls back to plain
/// summation when the panel sequence does not alternate.
QuadratureResult integrate_bessel_tail(const RealFn& F, double v, double r,
                                       double s0, double abs_tol,
                                       const QuadOptions& opt = {});

/// Scaled variant used by the transform engine:
///     int_{s0}^inf F(s) [J_v(r s)/(r s)^v] s^{2v+1} ds
/// which equals r^{-v} times the raw Bessel tail and stays well-scaled for
/// all orders and radii. Same partitioning and acceleration.
QuadratureResult hankel_point_integral(const RealFn& F, double v, double r,
                                       double s0, double abs_tol,
                                       const QuadOptions& opt = {});

}  // namespace dunkl
