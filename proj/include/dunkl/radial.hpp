#pragma once

#include <Eigen/Core>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/quadrature.hpp"

namespace dunkl {

/// Rank-one reduction parameters: ambient dimension n, multiplicity weight
/// gamma, and the derived Hankel order v = gamma + n/2 - 1.
struct DunklParams {
    int n;
    double gamma;
    double v;

    DunklParams(int n_, double gamma_);
    /// Homogeneity degree of the radial weight, n + 2*gamma = 2v + 2.
    double weight_degree() const { return n + 2.0 * gamma; }
};

struct GridSpec {
    double r_min = 1e-4;
    double r_max = 50.0;
    int count = 2048;
};

struct PowerTerm {
    double amplitude;
    double exponent;
};

/// Power-sum continuation beyond the sampled range: sum_i A_i r^{e_i}.
/// A single fitted term for generic profiles; several analytic terms for
/// kernels whose large-r expansion is known.
struct TailModel {
    std::vector<PowerTerm> terms;

    bool present() const { return !terms.empty(); }
    double value(double r) const;
    /// Slowest-decaying exponent (largest e_i); meaningful only if present().
    double leading_exponent() const;
};

/// A radial function: samples on a strictly increasing positive grid, cubic
/// interpolation in log r, linear blend to the origin value below the first
/// node (or a fitted power law when the profile is singular at the origin),
/// and a power-sum tail beyond the last node. Immutable; copies are cheap.
class RadialProfile {
public:
    RadialProfile() = default;

    static RadialProfile from_samples(Eigen::ArrayXd radii, Eigen::ArrayXd values,
                                      double origin_value,
                                      std::optional<TailModel> tail = {});
    /// Profile singular at r -> 0; the near-origin continuation is a power
    /// law fitted on the first decade of the grid.
    static RadialProfile from_samples_singular_origin(
        Eigen::ArrayXd radii, Eigen::ArrayXd values,
        std::optional<TailModel> tail = {});

    double operator()(double r) const;

    const Eigen::ArrayXd& radii() const;
    const Eigen::ArrayXd& values() const;
    double origin_value() const;  // +-inf when singular
    bool origin_is_finite() const;
    const TailModel& tail() const;
    double r_min() const;
    double r_max() const;
    /// Leading exponent of the near-origin continuation (0 for regular
    /// profiles with nonzero origin value).
    double origin_exponent() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Least-squares power-law fit (with one sub-leading correction term) on
/// log-log data over [r_hi/10, r_hi]; empty when the data has mixed signs or
/// is effectively zero there.
TailModel fit_tail(const Eigen::ArrayXd& radii, const Eigen::ArrayXd& values);

// ---------------------------------------------------------------------------
// Transform operations (unitary convention:
//   H_v(F)(r) = r^{-v} int_0^inf F(s) J_v(rs) s^{v+1} ds,
// the Gaussian e^{-r^2/2} is a fixed point and H_v is an involution).
// ---------------------------------------------------------------------------

RadialProfile sample_profile(const RealFn& F, const DunklParams& params,
                             const GridSpec& grid,
                             std::optional<TailModel> tail_override = {});

/// H_v(F)(r) at a single radius r > 0, for an arbitrary evaluator.
double hankel_point(const RealFn& F, const DunklParams& params, double r,
                    double abs_tol = 1e-10, const QuadOptions& opt = {});

/// Limit of H_v(F) at r = 0: (2^{-v}/Gamma(v+1)) int_0^inf F(s) s^{2v+1} ds.
double eval_at_origin_fn(const RealFn& F, const DunklParams& params,
                         const QuadOptions& opt = {});

enum class OriginPolicy { compute, singular };

/// Full transform of an arbitrary evaluator onto an output grid, radii in
/// parallel. The origin is either computed by eval_at_origin_fn or marked
/// singular and continued by a fitted power law.
RadialProfile hankel_transform(const RealFn& F, const DunklParams& params,
                               const GridSpec& out, OriginPolicy origin_policy,
                               const QuadOptions& opt = {},
                               std::optional<TailModel> tail_override = {});

/// Transform of a sampled profile. Decides origin handling from the tail
/// model; throws NonIntegrableProfileError when the tail is too heavy for
/// the transform to exist.
RadialProfile hankel(const RadialProfile& F, const DunklParams& params,
                     const GridSpec& out, const QuadOptions& opt = {});
RadialProfile hankel(const RadialProfile& F, const DunklParams& params);

double eval_at_origin(const RadialProfile& F, const DunklParams& params,
                      const QuadOptions& opt = {});

/// (int_0^inf |F|^p r^{n+2gamma-1} dr)^{1/p}; sup over grid and origin for
/// p = inf. Throws DivergentNormError when the tail or origin model implies
/// divergence.
double weighted_norm(const RadialProfile& F, double p, const DunklParams& params,
                     const QuadOptions& opt = {});

// Profile file format: CSV with header `r,value`, optional comment
// `# origin=<value>`.
void write_profile_csv(const std::string& path, const RadialProfile& profile,
                       bool timestamp = true);
RadialProfile read_profile_csv(const std::string& path);

/// Log-spaced radii for a grid spec.
Eigen::ArrayXd make_log_grid(const GridSpec& grid);

}  // namespace dunkl
