#include "logbloch/operators.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "logbloch/accumulate.hpp"
#include "logbloch/gauss_legendre.hpp"
#include "logbloch/quadrature.hpp"

namespace logbloch {

CoefficientSeries cesaro(const CoefficientSeries& f) {
    std::vector<Complex> v(f.size());
    KahanSumComplex prefix;
    for (std::size_t n = 0; n < v.size(); ++n) {
        prefix.add(f.coeffs()[n]);
        v[n] = prefix.value() / static_cast<double>(n + 1);
    }
    return CoefficientSeries(std::move(v));
}

CoefficientSeries libera_coeff(const CoefficientSeries& g) {
    std::vector<Complex> v(g.size());
    KahanSumComplex suffix;
    for (std::size_t n = v.size(); n-- > 0;) {
        suffix.add(g.coeffs()[n] / static_cast<double>(n + 1));
        v[n] = suffix.value();
    }
    return CoefficientSeries(std::move(v));
}

Complex libera_integral(const CoefficientSeries& g, Complex z, int quad_points) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("libera_integral: |z| must be < 1");
    if (quad_points < 1)
        throw std::invalid_argument("libera_integral: quad_points must be >= 1");
    const GaussLegendreRule& rule = gauss_legendre(quad_points);
    KahanSumComplex acc;
    for (int i = 0; i < quad_points; ++i) {
        const double t = 0.5 * (rule.nodes[i] + 1.0);
        acc.add(0.5 * rule.weights[i] * evaluate(g, t + (1.0 - t) * z));
    }
    return acc.value();
}

PairingValue pairing(const CoefficientSeries& f, const CoefficientSeries& g) {
    const std::size_t n = std::min(f.size(), g.size());
    KahanSumComplex acc;
    for (std::size_t k = 0; k < n; ++k)
        acc.add(f.coeffs()[k] * g.coeffs()[k]);
    return {acc.value(), static_cast<long>(n)};
}

double ell1_minus1_norm(const CoefficientSeries& g) {
    KahanSum acc;
    for (std::size_t n = 0; n < g.size(); ++n)
        acc.add(std::abs(g.coeffs()[n]) / static_cast<double>(n + 1));
    return acc.value();
}

double hardy_inequality_gap(const CoefficientSeries& g, double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("hardy_inequality_gap: r must lie in [0, 1]");
    const double mean = integral_mean_auto(g, r, 1.0).value;
    KahanSum rhs;
    double rn = 1.0;
    for (std::size_t n = 0; n < g.size(); ++n) {
        rhs.add(std::abs(g.coeffs()[n]) * rn / static_cast<double>(n + 1));
        rn *= r;
    }
    return 3.14159265358979323846 * mean - rhs.value();
}

double libera_derivative_bound_gap(const CoefficientSeries& f, double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("libera_derivative_bound_gap: r must lie in (0, 1)");
    const CoefficientSeries lf_prime = derivative(libera_coeff(f));
    const double lhs = r * integral_mean_quick(lf_prime, r, 1.0).value;

    // integral_r^1 M_1(s, f') ds under s = 1 - (1-r) e^{-(u - u_r)} spacing,
    // i.e. the same log substitution s = 1 - 2 e^{-u} restricted to u >= u_r.
    // M_1(s, f') tends to a positive constant as s -> 1, so the quadrature
    // must always run to the representable gap floor regardless of degree.
    const CoefficientSeries fp = derivative(f);
    const double u_r = std::log(2.0 / (1.0 - r));
    const double u_hi = std::max(u_r + 2.0, 36.5);
    const GaussLegendreRule& rule = gauss_legendre(12);
    KahanSum integral;
    double width = 0.5;
    double a = u_r;
    while (a < u_hi - 1e-12) {
        const double b = std::min(a + width, u_hi);
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (int i = 0; i < 12; ++i) {
            const double u = mid + half * rule.nodes[i];
            const double s = -std::expm1(std::log(2.0) - u);
            integral.add(half * rule.weights[i] * 2.0 * std::exp(-u) *
                         integral_mean_quick(fp, s, 1.0).value);
        }
        a = b;
        width *= 1.4;
    }
    const double rhs = 2.0 / (1.0 - r) * integral.value();
    return rhs - lhs;
}

} // namespace logbloch
