#include "logbloch/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "logbloch/accumulate.hpp"
#include "logbloch/fft.hpp"
#include "logbloch/gauss_legendre.hpp"

namespace logbloch {
namespace {

// Matches the trapezoid convergence reachable below the sample cap for rough
// high-degree integrands; inequality margins in the suites sit far above it.
constexpr double kRelTol = 3e-7;
// Beyond u ~ 36.5 the gap 1-r falls under the double-precision floor.
constexpr double kUCap = 36.5;
constexpr double kLog2 = 0.69314718055994530942;

std::vector<std::pair<double, double>> make_u_panels(double u_lo, double u_hi) {
    std::vector<std::pair<double, double>> spans;
    double width = 0.75;
    double a = u_lo;
    while (a < u_hi - 1e-12) {
        const double b = std::min(a + width, u_hi);
        spans.emplace_back(a, b);
        a = b;
        width *= 1.35;
    }
    return spans;
}

double radius_at(double u) {
    return -std::expm1(kLog2 - u);
}

double gap_at(double u) {
    return std::exp(kLog2 - u);
}

/// Max of |b| over the `stride`-spaced samples, sharpened by a parabola fit
/// through the best sample and its two neighbors plus one Horner check at the
/// fitted vertex. b carries the radius already (unit-circle samples).
double polished_max(const std::vector<Complex>& b, const std::vector<Complex>& s,
                    std::size_t stride) {
    const std::size_t K = s.size();
    std::size_t best = 0;
    double best2 = -1.0;
    for (std::size_t j = 0; j < K; j += stride) {
        const double m2 = std::norm(s[j]);
        if (m2 > best2) {
            best2 = m2;
            best = j;
        }
    }
    if (best2 <= 0.0)
        return 0.0;
    const double fm = std::abs(s[(best + K - stride) % K]);
    const double f0 = std::sqrt(best2);
    const double fp = std::abs(s[(best + stride) % K]);
    double out = std::max({fm, f0, fp});
    const double denom = fm - 2.0 * f0 + fp;
    if (denom < 0.0) {
        const double delta = 0.5 * (fm - fp) / denom;
        if (std::abs(delta) <= 1.0) {
            const double theta = 2.0 * std::numbers::pi *
                                 (static_cast<double>(best) + delta * static_cast<double>(stride)) /
                                 static_cast<double>(K);
            const Complex z(std::cos(theta), std::sin(theta));
            Complex acc(0.0, 0.0);
            for (std::size_t n = b.size(); n-- > 0;)
                acc = acc * z + b[n];
            out = std::max(out, std::abs(acc));
        }
    }
    return out;
}

/// Mean of |s|^p over all samples and over the even-index half grid,
/// max-scaled to avoid overflow for large p. Works on squared moduli so the
/// p = 1 inner loop stays a plain sqrt.
std::pair<double, double> mean_pow_pair(const std::vector<Complex>& s, double p) {
    double top2 = 0.0;
    for (const Complex& v : s)
        top2 = std::max(top2, std::norm(v));
    if (top2 == 0.0)
        return {0.0, 0.0};
    KahanSum full, half;
    const double half_p = 0.5 * p;
    for (std::size_t j = 0; j < s.size(); ++j) {
        const double q = std::norm(s[j]) / top2;
        const double t = (p == 1.0) ? std::sqrt(q) : std::pow(q, half_p);
        full.add(t);
        if ((j & 1) == 0)
            half.add(t);
    }
    const double top = std::sqrt(top2);
    const double K = static_cast<double>(s.size());
    return {top * std::pow(full.value() / K, 1.0 / p), top * std::pow(half.value() / (K / 2.0), 1.0 / p)};
}

void check_mean_args(double r, double p) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("integral_mean: r must lie in [0, 1]");
    if (!std::isinf(p) && !(p > 0.0))
        throw std::domain_error("integral_mean: p must be positive or infinity");
}

} // namespace

RadialGrid make_radial_grid() {
    const double u_lo = kLog2;
    // Weighted area integrands keep genuine mass near r = 1 at every degree
    // (their radial factor saturates), so the grid always runs to the floor
    // where 1 - r hits the last representable gap.
    const double u_hi = kUCap;
    RadialGrid grid;
    grid.u_lo = u_lo;
    grid.u_hi = u_hi;
    grid.transform = "u = log(2/(1-r)), composite Gauss-Legendre 12/6 in u";
    const GaussLegendreRule& main = gauss_legendre(12);
    const GaussLegendreRule& check = gauss_legendre(6);
    for (const auto& [a, b] : make_u_panels(u_lo, u_hi)) {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (int i = 0; i < 12; ++i) {
            const double u = mid + half * main.nodes[i];
            grid.u_nodes.push_back(u);
            grid.u_weights.push_back(half * main.weights[i]);
            grid.nodes.push_back(radius_at(u));
            grid.weights.push_back(half * main.weights[i] * gap_at(u));
        }
        for (int i = 0; i < 6; ++i) {
            const double u = mid + half * check.nodes[i];
            grid.check_u_nodes.push_back(u);
            grid.check_u_weights.push_back(half * check.weights[i]);
            grid.check_nodes.push_back(radius_at(u));
            grid.check_weights.push_back(half * check.weights[i] * gap_at(u));
        }
    }
    return grid;
}

double integral_mean(const CoefficientSeries& f, double r, double p, long K) {
    check_mean_args(r, p);
    if (K < 2 || !is_pow2(static_cast<std::size_t>(K)) ||
        K < 2L * f.degree() + 2)
        throw std::invalid_argument("integral_mean: K must be a power of two with K >= 2*deg+2");
    const auto s = circle_samples(f.coeffs(), r, static_cast<std::size_t>(K));
    if (std::isinf(p)) {
        double top = 0.0;
        for (const Complex& v : s)
            top = std::max(top, std::abs(v));
        return top;
    }
    return mean_pow_pair(s, p).first;
}

namespace {

/// Shifted block with the radius folded in: M_p(r, f) = rm0 * M_p(1, b).
struct ScaledBlock {
    std::vector<Complex> b;
    double rm0 = 1.0;
};

/// False when M_p(r, f) is exactly zero. The r-damped machine-negligible
/// tail is dropped, which collapses the sample count at interior radii.
bool make_scaled_block(const CoefficientSeries& f, double r, ScaledBlock& out) {
    const int m0 = f.bottom_nonzero();
    if (m0 < 0)
        return false;
    const int m1 = f.top_nonzero();
    out.rm0 = std::pow(r, m0);
    if (out.rm0 == 0.0)
        return false;
    out.b.assign(static_cast<std::size_t>(m1 - m0) + 1, Complex(0.0, 0.0));
    double rk = 1.0;
    double top = 0.0;
    for (std::size_t j = 0; j < out.b.size(); ++j) {
        out.b[j] = f.coeff(m0 + static_cast<int>(j)) * rk;
        top = std::max(top, std::abs(out.b[j]));
        rk *= r;
    }
    if (top == 0.0)
        return false;
    std::size_t width = out.b.size();
    while (width > 1 && std::abs(out.b[width - 1]) <= 1e-18 * top)
        --width;
    out.b.resize(width);
    return true;
}

MeanResult sampled_mean(const ScaledBlock& blk, double p, std::size_t K) {
    const auto s = circle_samples(blk.b, 1.0, K);
    double v, v_half;
    if (std::isinf(p)) {
        v = blk.rm0 * polished_max(blk.b, s, 1);
        v_half = blk.rm0 * polished_max(blk.b, s, 2);
    } else {
        const auto pair = mean_pow_pair(s, p);
        v = blk.rm0 * pair.first;
        v_half = blk.rm0 * pair.second;
    }
    return {v, static_cast<long>(K), std::abs(v - v_half)};
}

double parseval_mean(const CoefficientSeries& f, double r, int m1) {
    KahanSum acc;
    double rn = 1.0;
    for (int k = 0; k <= m1; ++k) {
        const double a = std::abs(f.coeff(k)) * rn;
        acc.add(a * a);
        rn *= r;
    }
    return std::sqrt(acc.value());
}

std::size_t base_samples(const ScaledBlock& blk) {
    return next_pow2(std::max<std::size_t>(2 * blk.b.size() + 2, 16));
}

/// One-shot mean for the radial profile evaluators: the panel-level
/// lower-order companion rule already tracks the integration error there, so
/// the per-node doubling of integral_mean_auto would be redundant work.
MeanResult profile_mean(const CoefficientSeries& f, double r, double p) {
    if (p == 2.0)
        return {parseval_mean(f, r, f.top_nonzero()), 0, 0.0};
    ScaledBlock blk;
    if (!make_scaled_block(f, r, blk))
        return {0.0, 0, 0.0};
    return sampled_mean(blk, p, base_samples(blk));
}

} // namespace

MeanResult integral_mean_quick(const CoefficientSeries& f, double r, double p) {
    check_mean_args(r, p);
    return profile_mean(f, r, p);
}

MeanResult integral_mean_auto(const CoefficientSeries& f, double r, double p) {
    check_mean_args(r, p);
    if (p == 2.0) {
        const int m1 = f.top_nonzero();
        if (m1 < 0)
            return {0.0, 0, 0.0};
        // Parseval: exact from coefficients.
        return {parseval_mean(f, r, m1), 0, 0.0};
    }
    ScaledBlock blk;
    if (!make_scaled_block(f, r, blk))
        return {0.0, 0, 0.0};
    std::size_t K = base_samples(blk);
    const std::size_t cap = std::max<std::size_t>(std::size_t{1} << 18, 4 * K);
    for (;;) {
        const MeanResult m = sampled_mean(blk, p, K);
        if (m.est_error <= kRelTol * std::max(std::abs(m.value), 1e-300) || 2 * K > cap)
            return m;
        K *= 2;
    }
}

double hardy_norm(const CoefficientSeries& f, double p) {
    return integral_mean_auto(f, 1.0, p).value;
}

AreaNormEvaluator::AreaNormEvaluator(const CoefficientSeries& f) {
    abs_f0_ = std::abs(f.coeff(0));
    const CoefficientSeries fp = derivative(f);
    grid_ = make_radial_grid();
    main_profile_.resize(grid_.nodes.size());
    main_est_.resize(grid_.nodes.size());
    check_profile_.resize(grid_.check_nodes.size());
    for (std::size_t i = 0; i < grid_.nodes.size(); ++i) {
        const MeanResult m = profile_mean(fp, grid_.nodes[i], 1.0);
        main_profile_[i] = m.value;
        main_est_[i] = m.est_error;
        max_circle_ = std::max(max_circle_, m.circle_points);
    }
    for (std::size_t i = 0; i < grid_.check_nodes.size(); ++i)
        check_profile_[i] = profile_mean(fp, grid_.check_nodes[i], 1.0).value;
}

NormResult AreaNormEvaluator::norm(const WeightSpec& weight) const {
    KahanSum main, est_acc, check;
    for (std::size_t i = 0; i < grid_.nodes.size(); ++i) {
        const double w = weight(grid_.nodes[i]) * grid_.nodes[i] * grid_.weights[i];
        main.add(main_profile_[i] * w);
        est_acc.add(main_est_[i] * w);
    }
    for (std::size_t i = 0; i < grid_.check_nodes.size(); ++i)
        check.add(check_profile_[i] * weight(grid_.check_nodes[i]) * grid_.check_nodes[i] *
                  grid_.check_weights[i]);
    NormResult out;
    out.value = abs_f0_ + 2.0 * main.value();
    out.radial_points = static_cast<long>(grid_.nodes.size());
    out.circle_points = max_circle_;
    out.est_error = 2.0 * std::abs(main.value() - check.value()) + 2.0 * est_acc.value();
    return out;
}

SupNormEvaluator::SupNormEvaluator(const CoefficientSeries& f)
    : fprime_(derivative(f)) {
    abs_f0_ = std::abs(f.coeff(0));
    const RadialGrid grid = make_radial_grid();
    cand_u_.push_back(grid.u_lo);
    cand_u_.insert(cand_u_.end(), grid.u_nodes.begin(), grid.u_nodes.end());
    cand_u_.push_back(grid.u_hi);
    cand_r_.resize(cand_u_.size());
    profile_.resize(cand_u_.size());
    profile_est_.resize(cand_u_.size());
    for (std::size_t i = 0; i < cand_u_.size(); ++i) {
        cand_r_[i] = radius_at(cand_u_[i]);
        const MeanResult m = profile_mean(fprime_, cand_r_[i], std::numeric_limits<double>::infinity());
        profile_[i] = m.value;
        profile_est_[i] = m.est_error;
        max_circle_ = std::max(max_circle_, m.circle_points);
    }
}

NormResult SupNormEvaluator::norm(const WeightSpec& weight) const {
    const auto supremand_at = [&](double u, double minf) {
        const double r = radius_at(u);
        return gap_at(u) * minf / weight(r);
    };
    std::size_t best = 0;
    double grid_best = -1.0;
    for (std::size_t i = 0; i < cand_u_.size(); ++i) {
        const double s = supremand_at(cand_u_[i], profile_[i]);
        if (s > grid_best) {
            grid_best = s;
            best = i;
        }
    }
    long circle = max_circle_;
    const auto eval_fresh = [&](double u) {
        const MeanResult m =
            profile_mean(fprime_, radius_at(u), std::numeric_limits<double>::infinity());
        circle = std::max(circle, m.circle_points);
        return supremand_at(u, m.value);
    };
    double ua = cand_u_[best == 0 ? 0 : best - 1];
    double ub = cand_u_[best];
    double uc = cand_u_[std::min(best + 1, cand_u_.size() - 1)];
    double vb = grid_best;
    for (int round = 0; round < 3; ++round) {
        const double u1 = 0.5 * (ua + ub);
        const double u2 = 0.5 * (ub + uc);
        const double v1 = (u1 < ub) ? eval_fresh(u1) : vb;
        const double v2 = (u2 > ub) ? eval_fresh(u2) : vb;
        if (v1 >= vb && v1 >= v2) {
            uc = ub;
            ub = u1;
            vb = v1;
        } else if (v2 >= vb && v2 >= v1) {
            ua = ub;
            ub = u2;
            vb = v2;
        } else {
            ua = u1;
            uc = u2;
        }
    }
    NormResult out;
    out.value = abs_f0_ + vb;
    out.radial_points = static_cast<long>(cand_u_.size());
    out.circle_points = circle;
    out.est_error = (vb - grid_best) +
                    gap_at(cand_u_[best]) * profile_est_[best] / weight(cand_r_[best]);
    return out;
}

NormResult bloch_log_norm(const CoefficientSeries& f, double alpha) {
    return SupNormEvaluator(f).norm(WeightSpec::log_alpha(alpha));
}

NormResult bloch_sup_norm(const CoefficientSeries& f, const WeightSpec& weight) {
    return SupNormEvaluator(f).norm(weight);
}

NormResult bloch1_log_norm(const CoefficientSeries& f, const WeightSpec& weight) {
    return AreaNormEvaluator(f).norm(weight);
}

std::array<double, 3> discretization_sides(const std::function<double(double)>& phi, double q,
                                           const std::vector<double>& lambda) {
    const bool inf = std::isinf(q);
    if (!inf && !(q > 0.0))
        throw std::domain_error("discretization_sides: q must be positive or infinity");
    const int L = static_cast<int>(lambda.size());
    if (L == 0)
        return {0.0, 0.0, 0.0};

    const auto sup_side = [&](double r) {
        double s = 0.0;
        for (int n = 1; n <= L; ++n)
            s = std::max(s, lambda[static_cast<std::size_t>(n - 1)] *
                                std::pow(r, std::ldexp(2.0, n) - 1.0));
        return s;
    };
    const auto sum_side = [&](double r) {
        KahanSum s;
        for (int n = 1; n <= L; ++n)
            s.add(lambda[static_cast<std::size_t>(n - 1)] *
                  std::pow(r, std::ldexp(0.5, n) - 1.0));
        return s.value();
    };

    const RadialGrid grid = make_radial_grid();

    double first, second;
    if (inf) {
        double f1 = 0.0, f2 = phi(1.0) * sum_side(0.0);
        for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
            const double r = grid.nodes[i];
            const double w = phi(1.0 - r);
            f1 = std::max(f1, w * sup_side(r));
            f2 = std::max(f2, w * sum_side(r));
        }
        first = f1;
        second = f2;
    } else {
        KahanSum f1, f2;
        for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
            const double r = grid.nodes[i];
            const double w = phi(1.0 - r);
            // (1-r)^{-1} phi^q S1^q dr integrates as phi^q S1^q du.
            f1.add(grid.u_weights[i] * std::pow(w * sup_side(r), q));
            f2.add(grid.weights[i] * (1.0 - r) * std::pow(w * sum_side(r), q));
        }
        first = std::pow(f1.value(), 1.0 / q);
        second = std::pow(f2.value(), 1.0 / q);
    }

    double third;
    if (inf) {
        third = 0.0;
        for (int n = 1; n <= L; ++n)
            third = std::max(third, phi(std::ldexp(1.0, -n)) * lambda[static_cast<std::size_t>(n - 1)]);
    } else {
        KahanSum acc;
        for (int n = 1; n <= L; ++n)
            acc.add(std::pow(phi(std::ldexp(1.0, -n)) * lambda[static_cast<std::size_t>(n - 1)], q));
        third = std::pow(acc.value(), 1.0 / q);
    }
    return {first, second, third};
}

std::pair<double, double> normal_weight_moment_bound(const std::function<double(double)>& phi, int n) {
    if (n < 0)
        throw std::invalid_argument("normal_weight_moment_bound: n must be >= 0");
    const RadialGrid grid = make_radial_grid();
    KahanSum acc;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i)
        acc.add(grid.u_weights[i] * phi(1.0 - grid.nodes[i]) *
                std::pow(grid.nodes[i], static_cast<double>(n)));
    return {acc.value(), phi(1.0 / (n + 1.0))};
}

} // namespace logbloch
