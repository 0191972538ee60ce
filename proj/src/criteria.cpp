#include "logbloch/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "logbloch/accumulate.hpp"
#include "logbloch/quadrature.hpp"

namespace logbloch {

namespace {

constexpr double kMonotoneTol = 1e-12;

// Returns the first index whose coefficient has a nonzero imaginary part or a
// negative real part, or -1 if none.
int first_nonreal_or_negative(const CoefficientSeries& g) {
    for (int n = 0; n <= g.degree(); ++n) {
        const Complex c = g.coeff(n);
        if (c.imag() != 0.0 || c.real() < 0.0) return n;
    }
    return -1;
}

} // namespace

MonotoneReport monotone_check(std::span<const double> a) {
    MonotoneReport rep;
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (!std::isfinite(a[n])) {
            rep.ok = false;
            rep.first_violation = static_cast<int>(n);
            return rep;
        }
        if (a[n] < -kMonotoneTol) {
            rep.ok = false;
            rep.first_violation = static_cast<int>(n);
            return rep;
        }
        if (n + 1 < a.size() && a[n] < a[n + 1] - kMonotoneTol) {
            rep.ok = false;
            rep.first_violation = static_cast<int>(n);
            return rep;
        }
    }
    return rep;
}

double s_alpha(std::span<const double> a, double alpha) {
    const MonotoneReport rep = monotone_check(a);
    if (!rep.ok) {
        throw std::invalid_argument(
            "s_alpha: sequence must be nonnegative and nonincreasing; first "
            "offending index " +
            std::to_string(rep.first_violation));
    }
    KahanSum sum;
    for (std::size_t n = 0; n < a.size(); ++n) {
        const double dn = static_cast<double>(n);
        sum.add(a[n] * std::pow(std::log(dn + 2.0), alpha) / (dn + 1.0));
    }
    return sum.value();
}

double k_alpha(const CoefficientSeries& g, double alpha) {
    const int bad = first_nonreal_or_negative(g);
    if (bad >= 0) {
        throw std::invalid_argument(
            "k_alpha: coefficients must be real and nonnegative; first "
            "offending index " +
            std::to_string(bad));
    }
    KahanSum sum;
    for (int n = 0; n <= g.degree(); ++n) {
        const double dn = static_cast<double>(n);
        sum.add(g.coeff(n).real() * std::pow(std::log(dn + 2.0), alpha + 1.0) /
                (dn + 1.0));
    }
    return sum.value();
}

double k_loglog(const CoefficientSeries& g) {
    const int bad = first_nonreal_or_negative(g);
    if (bad >= 0) {
        throw std::invalid_argument(
            "k_loglog: coefficients must be real and nonnegative; first "
            "offending index " +
            std::to_string(bad));
    }
    KahanSum sum;
    for (int n = 0; n <= g.degree(); ++n) {
        const double dn = static_cast<double>(n);
        sum.add(g.coeff(n).real() * std::log(std::log(dn + 4.0)) / (dn + 1.0));
    }
    return sum.value();
}

double frame_norm_b1(const CoefficientSeries& f, double alpha, const Frame& frame) {
    if (!frame.covers(f.degree())) {
        throw std::out_of_range("frame_norm_b1: frame does not cover the series degree");
    }
    KahanSum sum;
    for (int n = 0; n <= frame.n_max(); ++n) {
        const CoefficientSeries block = hadamard(frame.vn(n), f);
        const double m1 = hardy_norm(block, 1.0);
        sum.add(std::pow(static_cast<double>(n) + 1.0, alpha) * m1);
    }
    return sum.value();
}

double frame_norm_bloch(const CoefficientSeries& f, double alpha, const Frame& frame) {
    if (!frame.covers(f.degree())) {
        throw std::out_of_range("frame_norm_bloch: frame does not cover the series degree");
    }
    double best = 0.0;
    for (int n = 0; n <= frame.n_max(); ++n) {
        const CoefficientSeries block = hadamard(frame.vn(n), f);
        const double minf = hardy_norm(block, std::numeric_limits<double>::infinity());
        best = std::max(best, std::pow(static_cast<double>(n) + 1.0, -alpha) * minf);
    }
    return best;
}

std::vector<double> little_bloch_profile(const CoefficientSeries& f, double alpha,
                                         const Frame& frame) {
    if (!frame.covers(f.degree())) {
        throw std::out_of_range("little_bloch_profile: frame does not cover the series degree");
    }
    std::vector<double> profile;
    profile.reserve(static_cast<std::size_t>(frame.n_max()) + 1);
    for (int n = 0; n <= frame.n_max(); ++n) {
        const CoefficientSeries block = hadamard(frame.vn(n), f);
        const double minf = hardy_norm(block, std::numeric_limits<double>::infinity());
        profile.push_back(std::pow(static_cast<double>(n) + 1.0, -alpha) * minf);
    }
    return profile;
}

double frame_norm_loglog(const CoefficientSeries& f, FrameNormMode mode, const Frame& frame) {
    if (!frame.covers(f.degree())) {
        throw std::out_of_range("frame_norm_loglog: frame does not cover the series degree");
    }
    if (mode == FrameNormMode::b1) {
        KahanSum sum;
        for (int n = 0; n <= frame.n_max(); ++n) {
            const CoefficientSeries block = hadamard(frame.vn(n), f);
            const double m1 = hardy_norm(block, 1.0);
            sum.add(std::log(static_cast<double>(n) + 2.0) * m1);
        }
        return sum.value();
    }
    double best = 0.0;
    for (int n = 0; n <= frame.n_max(); ++n) {
        const CoefficientSeries block = hadamard(frame.vn(n), f);
        const double minf = hardy_norm(block, std::numeric_limits<double>::infinity());
        best = std::max(best, minf / std::log(static_cast<double>(n) + 2.0));
    }
    return best;
}

MembershipVerdict make_verdict(std::string space_tag, double direct_norm,
                               double sequence_side) {
    MembershipVerdict v;
    v.space_tag = std::move(space_tag);
    v.direct_norm = direct_norm;
    v.sequence_side = sequence_side;
    if (sequence_side > 0.0) {
        v.ratio = direct_norm / sequence_side;
    } else {
        v.ratio = direct_norm > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
    }
    if (v.ratio >= 1e-3 && v.ratio <= 1e3) {
        v.verdict_note = "norms comparable";
    } else if (v.ratio > 1e3) {
        v.verdict_note = "direct norm dominates; sequence side too small";
    } else {
        v.verdict_note = "sequence side dominates; direct norm too small";
    }
    return v;
}

} // namespace logbloch
