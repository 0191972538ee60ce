#include "logbloch/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace logbloch {
namespace {

bool finite(Complex c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

} // namespace

CoefficientSeries::CoefficientSeries() : coeffs_(1, Complex(0.0, 0.0)) {}

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("CoefficientSeries: empty coefficient vector");
    for (const Complex& c : coeffs_)
        if (!finite(c))
            throw std::invalid_argument("CoefficientSeries: non-finite coefficient");
}

CoefficientSeries CoefficientSeries::zero(int degree) {
    if (degree < 0)
        throw std::invalid_argument("CoefficientSeries::zero: negative degree");
    return CoefficientSeries(std::vector<Complex>(static_cast<std::size_t>(degree) + 1));
}

CoefficientSeries CoefficientSeries::ones(int degree) {
    if (degree < 0)
        throw std::invalid_argument("CoefficientSeries::ones: negative degree");
    return CoefficientSeries(
        std::vector<Complex>(static_cast<std::size_t>(degree) + 1, Complex(1.0, 0.0)));
}

CoefficientSeries CoefficientSeries::monomial(int k, Complex c) {
    if (k < 0)
        throw std::invalid_argument("CoefficientSeries::monomial: negative index");
    std::vector<Complex> v(static_cast<std::size_t>(k) + 1, Complex(0.0, 0.0));
    v.back() = c;
    return CoefficientSeries(std::move(v));
}

CoefficientSeries CoefficientSeries::from_real(const std::vector<double>& a) {
    std::vector<Complex> v(a.size());
    std::transform(a.begin(), a.end(), v.begin(), [](double x) { return Complex(x, 0.0); });
    return CoefficientSeries(std::move(v));
}

int CoefficientSeries::top_nonzero() const {
    for (int n = degree(); n >= 0; --n)
        if (coeffs_[static_cast<std::size_t>(n)] != Complex(0.0, 0.0))
            return n;
    return -1;
}

int CoefficientSeries::bottom_nonzero() const {
    for (int n = 0; n <= degree(); ++n)
        if (coeffs_[static_cast<std::size_t>(n)] != Complex(0.0, 0.0))
            return n;
    return -1;
}

CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g) {
    const std::size_t n = std::min(f.size(), g.size());
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = f.coeffs()[i] * g.coeffs()[i];
    return CoefficientSeries(std::move(v));
}

CoefficientSeries derivative(const CoefficientSeries& f) {
    if (f.degree() == 0)
        return CoefficientSeries::zero(0);
    std::vector<Complex> v(f.size() - 1);
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = static_cast<double>(n + 1) * f.coeffs()[n + 1];
    return CoefficientSeries(std::move(v));
}

CoefficientSeries r_operator(const CoefficientSeries& f) {
    std::vector<Complex> v(f.size());
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = static_cast<double>(n + 1) * f.coeffs()[n];
    return CoefficientSeries(std::move(v));
}

CoefficientSeries scale_radius(const CoefficientSeries& f, double r) {
    if (!(r >= 0.0 && r <= 1.0))
        throw std::domain_error("scale_radius: r must lie in [0, 1]");
    std::vector<Complex> v(f.size());
    double rn = 1.0;
    for (std::size_t n = 0; n < v.size(); ++n) {
        v[n] = f.coeffs()[n] * rn;
        rn *= r;
    }
    return CoefficientSeries(std::move(v));
}

Complex evaluate(const CoefficientSeries& f, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::domain_error("evaluate: |z| > 1");
    Complex acc(0.0, 0.0);
    for (int n = f.degree(); n >= 0; --n)
        acc = acc * z + f.coeffs()[static_cast<std::size_t>(n)];
    return acc;
}

CoefficientSeries add(const CoefficientSeries& f, const CoefficientSeries& g) {
    std::vector<Complex> v(std::max(f.size(), g.size()));
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = f.coeff(static_cast<int>(n)) + g.coeff(static_cast<int>(n));
    return CoefficientSeries(std::move(v));
}

CoefficientSeries subtract(const CoefficientSeries& f, const CoefficientSeries& g) {
    std::vector<Complex> v(std::max(f.size(), g.size()));
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = f.coeff(static_cast<int>(n)) - g.coeff(static_cast<int>(n));
    return CoefficientSeries(std::move(v));
}

CoefficientSeries scale(Complex c, const CoefficientSeries& f) {
    std::vector<Complex> v(f.size());
    for (std::size_t n = 0; n < v.size(); ++n)
        v[n] = c * f.coeffs()[n];
    return CoefficientSeries(std::move(v));
}

double max_coeff_distance(const CoefficientSeries& f, const CoefficientSeries& g) {
    const int top = std::max(f.degree(), g.degree());
    double m = 0.0;
    for (int n = 0; n <= top; ++n)
        m = std::max(m, std::abs(f.coeff(n) - g.coeff(n)));
    return m;
}

} // namespace logbloch
