#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "logbloch/series.hpp"
#include "logbloch/weights.hpp"

namespace logbloch {

/// Composite Gauss-Legendre grid under the substitution u = log(2/(1-r)),
/// r = 1 - 2 e^{-u}. `weights` integrate dr (jacobian 2 e^{-u} included);
/// `u_weights` integrate du (no jacobian), which is the natural measure for
/// integrands carrying a 1/(1-r) factor. The `check_*` arrays hold a
/// lower-order companion rule on the same panels for error estimation.
struct RadialGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> u_nodes;
    std::vector<double> u_weights;
    std::vector<double> check_nodes;
    std::vector<double> check_weights;
    std::vector<double> check_u_nodes;
    std::vector<double> check_u_weights;
    double u_lo = 0.0;
    double u_hi = 0.0;
    std::string transform;
};

/// Grid resolving radii down to the double-precision gap floor
/// (1 - r ~ 2.6e-16, u ~ 36.5).
RadialGrid make_radial_grid();

/// Uniform-circle quadrature value of M_p(r, f) at an explicit sample count.
/// Requires K a power of two with K >= 2*deg(f)+2 (throws
/// std::invalid_argument otherwise), 0 <= r <= 1, and p > 0 or infinity
/// (std::domain_error otherwise). For p = infinity returns the maximum of
/// |f| over the samples.
double integral_mean(const CoefficientSeries& f, double r, double p, long K);

struct MeanResult {
    double value = 0.0;
    long circle_points = 0;
    double est_error = 0.0;
};

/// M_p(r, f) with automatic sample-count selection: the constant-modulus
/// monomial factor z^{m0} is split off, the remaining block is sampled at the
/// smallest adequate power of two, and the count doubles until two dyadic
/// levels agree to 3e-7 relative (cap 2^18, or one doubling above the
/// starting count for very wide blocks). p = 2 is evaluated exactly from
/// coefficients. For p = infinity the sample maximum is polished through the
/// parabola vertex of the three neighbouring sample moduli.
MeanResult integral_mean_auto(const CoefficientSeries& f, double r, double p);

/// Single sampling pass at the base count, with the half-grid difference as
/// the error estimate. Meant for radial panel integrations that carry their
/// own coarse-vs-fine convergence check, where per-node doubling is wasted.
MeanResult integral_mean_quick(const CoefficientSeries& f, double r, double p);

/// M_p at r = 1 (for polynomials the supremum over r).
double hardy_norm(const CoefficientSeries& f, double p);

struct NormResult {
    double value = 0.0;
    long radial_points = 0;
    long circle_points = 0;
    double est_error = 0.0;
};

/// Caches the M_1(r, f') profile of one series over the radial grid so that
/// several weighted area norms of the same series cost one profile.
class AreaNormEvaluator {
public:
    explicit AreaNormEvaluator(const CoefficientSeries& f);

    /// |f(0)| + 2 * integral_0^1 M_1(r, f') * weight(r) * r dr.
    NormResult norm(const WeightSpec& weight) const;

private:
    double abs_f0_ = 0.0;
    RadialGrid grid_;
    std::vector<double> main_profile_;
    std::vector<double> main_est_;
    std::vector<double> check_profile_;
    long max_circle_ = 0;
};

/// Caches the M_inf(r, f') profile over the grid (plus the r = 0 and r = r_max
/// endpoints) so several weighted sup norms of the same series share it.
class SupNormEvaluator {
public:
    explicit SupNormEvaluator(const CoefficientSeries& f);

    /// |f(0)| + sup_r (1-r) * M_inf(r, f') / weight(r). The grid supremum is
    /// sharpened by three rounds of interval refinement around the maximizer.
    NormResult norm(const WeightSpec& weight) const;

private:
    double abs_f0_ = 0.0;
    CoefficientSeries fprime_;
    std::vector<double> cand_r_;
    std::vector<double> cand_u_;
    std::vector<double> profile_;
    std::vector<double> profile_est_;
    long max_circle_ = 0;
};

/// Bloch-type sup norm with weight log^alpha(2/(1-r)).
NormResult bloch_log_norm(const CoefficientSeries& f, double alpha);

/// Sup norm against an arbitrary weight (the weight divides the supremand).
NormResult bloch_sup_norm(const CoefficientSeries& f, const WeightSpec& weight);

/// Weighted area norm |f(0)| + 2 int M_1(r, f') weight(r) r dr.
NormResult bloch1_log_norm(const CoefficientSeries& f, const WeightSpec& weight);

/// Discretization comparison for a normal profile phi and a nonnegative
/// sequence lambda (indexed from n = 1):
///   F1(r) = (1-r)^{-1/q} phi(1-r) sup_n lambda_n r^{2^{n+1}-1}
///   F2(r) = (1-r)^{+1/q} phi(1-r) sum_n lambda_n r^{2^{n-1}-1}
/// Returns (||F1||_{L^q(0,1)}, ||F2||_{L^q(0,1)}, ||{phi(2^-n) lambda_n}||_{l^q});
/// for q = infinity all three are suprema. Throws std::domain_error for q <= 0.
std::array<double, 3> discretization_sides(const std::function<double(double)>& phi, double q,
                                           const std::vector<double>& lambda);

/// (quadrature of int_0^1 (phi(1-r)/(1-r)) r^n dr, phi(1/(n+1))).
std::pair<double, double> normal_weight_moment_bound(const std::function<double(double)>& phi, int n);

} // namespace logbloch
