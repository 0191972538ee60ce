#pragma once

#include "logbloch/series.hpp"

namespace logbloch {

/// result(n) = (1/(n+1)) sum_{k<=n} f(k); running prefix sums, same degree.
CoefficientSeries cesaro(const CoefficientSeries& f);

/// result(n) = sum_{k=n}^{deg g} g(k)/(k+1); reverse suffix sums, same degree.
CoefficientSeries libera_coeff(const CoefficientSeries& g);

/// Segment-average form: integral_0^1 g(t + (1-t) z) dt by Gauss-Legendre
/// with `quad_points` nodes. Throws std::domain_error for |z| >= 1.
Complex libera_integral(const CoefficientSeries& g, Complex z, int quad_points);

struct PairingValue {
    Complex value{0.0, 0.0};
    /// Number of coefficient modes summed (min degree + 1).
    long terms = 0;
};

/// sum_n f(n) * conj-free g(n) over shared modes; for truncated series this
/// equals the Abel limit exactly.
PairingValue pairing(const CoefficientSeries& f, const CoefficientSeries& g);

/// sum_n |g(n)| / (n+1).
double ell1_minus1_norm(const CoefficientSeries& g);

/// pi * M_1(r, g) - sum_n |g(n)| r^n / (n+1); nonnegative up to quadrature
/// tolerance.
double hardy_inequality_gap(const CoefficientSeries& g, double r);

/// 2 (1-r)^{-1} integral_r^1 M_1(s, f') ds - r * M_1(r, (Lf)') where L is the
/// tail-sum operator above. Nonnegative up to quadrature tolerance.
/// Throws std::domain_error unless 0 < r < 1.
double libera_derivative_bound_gap(const CoefficientSeries& f, double r);

} // namespace logbloch
