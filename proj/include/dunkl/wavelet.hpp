#pragma once

#include <utility>
#include <vector>

#include "dunkl/quadrature.hpp"

namespace dunkl {

struct WaveletAtom {
    double s;  // location, > 0
    double c;  // coefficient, nonzero
};

/// Finite atomic signed measure sum_j c_j delta_{s_j} on (0, inf) with zero
/// total mass and a cached vanishing-moment order: the largest M such that
/// sum_j c_j s_j^m = 0 for all integer m <= M.
class WaveletMeasure {
public:
    explicit WaveletMeasure(std::vector<WaveletAtom> atoms);

    const std::vector<WaveletAtom>& atoms() const { return atoms_; }
    int vanishing_order() const { return vanishing_order_; }
    double total_variation() const { return total_variation_; }
    double max_location() const { return atoms_.back().s; }
    double min_location() const { return atoms_.front().s; }

    /// Integer moments cached up to the requested order.
    double integer_moment(int m) const;

private:
    std::vector<WaveletAtom> atoms_;
    int vanishing_order_ = 0;
    double total_variation_ = 0.0;
    mutable std::vector<double> moment_cache_;
};

/// Solves the homogeneous moment system sum_j c_j s_j^m = 0 for m = 0..M
/// with the normalization c_1 = 1. Unique when count == M+2; least-norm in
/// the remaining coefficients otherwise.
WaveletMeasure construct_vanishing_moments(const std::vector<double>& points, int M);

/// sum_j c_j s_j^m for real m >= 0.
double moment(const WaveletMeasure& nu, double m);

/// Laplace transform mu(t) = sum_j c_j exp(-t s_j).
double laplace_transform(const WaveletMeasure& nu, double t);

/// mu(t) evaluated through the Taylor series past the vanishing moments;
/// avoids the catastrophic cancellation of the direct sum when t is small.
double laplace_transform_accurate(const WaveletMeasure& nu, double t);

/// C(r, nu) = int_0^inf mu(t) t^{-1-r} dt in closed form:
///   r not integer: Gamma(-r) sum_j c_j s_j^r
///   r integer:     ((-1)^{r+1}/r!) sum_j c_j s_j^r ln s_j
/// Requires vanishing_order >= floor(r).
double normalizing_constant(const WaveletMeasure& nu, double r);

/// Same constant through numerical integration of mu(t) t^{-1-r}; the
/// small-t region is summed by series to respect the moment cancellation.
double normalizing_constant_via_mu(const WaveletMeasure& nu, double r,
                                   double tol = 1e-10);

/// kappa_nu(r) = sum_j c_j s_j^{-r}.
double kappa(const WaveletMeasure& nu, double r);

/// Riemann-Liouville kernel K_theta(s) =
///   (1/(s Gamma(theta+1))) sum_{s_j < s} c_j (s - s_j)^theta.
double rl_kernel(const WaveletMeasure& nu, double theta, double s);

/// int_0^inf K_theta(s) ds, numerically; equals normalizing_constant(nu,
/// theta). Requires vanishing_order >= floor(theta) for integrability.
double rl_kernel_integral(const WaveletMeasure& nu, double theta,
                          double tol = 1e-10);

/// int_0^inf exp(-x s) K_theta(s) ds: the Lemma-route multiplier. The far
/// region uses the binomial expansion of K to avoid cancellation.
double rl_kernel_laplace(const WaveletMeasure& nu, double theta, double x,
                         double tol = 1e-10);

/// Parse the CLI measure syntax "s:c,s:c,...".
WaveletMeasure parse_measure(const std::string& text);

}  // namespace dunkl
