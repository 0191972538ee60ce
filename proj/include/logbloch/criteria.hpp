#pragma once

#include <span>
#include <string>
#include <vector>

#include "logbloch/frame.hpp"
#include "logbloch/series.hpp"

namespace logbloch {

struct MonotoneReport {
    bool ok = true;
    /// First index where a[n] < a[n+1] - 1e-12 or a[n] < -1e-12, else -1.
    int first_violation = -1;
};

/// Nonincreasing-and-nonnegative check with absolute tolerance 1e-12.
MonotoneReport monotone_check(std::span<const double> a);

/// sum_n a_n log^alpha(n+2) / (n+1) for a nonincreasing nonnegative sequence.
/// Throws std::invalid_argument naming the first offending index otherwise.
double s_alpha(std::span<const double> a, double alpha);

/// sum_n g(n) log^{alpha+1}(n+2) / (n+1); requires real nonnegative
/// coefficients (throws std::invalid_argument naming the first violation).
double k_alpha(const CoefficientSeries& g, double alpha);

/// Boundary variant of the coefficient criterion at alpha = -1:
/// sum_n g(n) loglog(n+4) / (n+1). Same nonnegativity requirement.
double k_loglog(const CoefficientSeries& g);

/// sum_n (n+1)^alpha * M_1(1, V_n * f).
double frame_norm_b1(const CoefficientSeries& f, double alpha, const Frame& frame);

/// sup_n (n+1)^{-alpha} * M_inf(1, V_n * f).
double frame_norm_bloch(const CoefficientSeries& f, double alpha, const Frame& frame);

/// The sequence (n+1)^{-alpha} * M_inf(1, V_n * f), n = 0..n_max; membership
/// in the little-o space shows as decay to 0.
std::vector<double> little_bloch_profile(const CoefficientSeries& f, double alpha,
                                         const Frame& frame);

enum class FrameNormMode { b1, bloch };

/// Frame norm with the polynomial growth factor replaced by log(n+2):
/// b1 mode sums log(n+2) * M_1(1, V_n * f); bloch mode takes
/// sup M_inf(1, V_n * f) / log(n+2).
double frame_norm_loglog(const CoefficientSeries& f, FrameNormMode mode, const Frame& frame);

struct MembershipVerdict {
    std::string space_tag;
    double direct_norm = 0.0;
    double sequence_side = 0.0;
    double ratio = 0.0;
    std::string verdict_note;
};

MembershipVerdict make_verdict(std::string space_tag, double direct_norm, double sequence_side);

} // namespace logbloch
