#pragma once

#include <complex>
#include <vector>

namespace logbloch {

using Complex = std::complex<double>;

/// Truncated Taylor series sum_{n=0}^{degree} c_n z^n as a dense coefficient
/// array. Immutable in spirit: all operations return new values.
class CoefficientSeries {
public:
    /// The zero constant (degree 0).
    CoefficientSeries();

    /// Takes ownership of the coefficients; degree = coeffs.size() - 1.
    /// Throws std::invalid_argument on an empty vector or non-finite entries.
    explicit CoefficientSeries(std::vector<Complex> coeffs);

    static CoefficientSeries zero(int degree);
    static CoefficientSeries ones(int degree);
    static CoefficientSeries monomial(int k, Complex c = Complex(1.0, 0.0));
    static CoefficientSeries from_real(const std::vector<double>& a);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t size() const { return coeffs_.size(); }

    /// Coefficient at index n; zero outside [0, degree].
    Complex coeff(int n) const {
        if (n < 0 || n > degree())
            return Complex(0.0, 0.0);
        return coeffs_[static_cast<std::size_t>(n)];
    }

    const std::vector<Complex>& coeffs() const { return coeffs_; }

    /// Largest index with a nonzero coefficient, or -1 for the zero series.
    int top_nonzero() const;
    /// Smallest index with a nonzero coefficient, or -1 for the zero series.
    int bottom_nonzero() const;

private:
    std::vector<Complex> coeffs_;
};

/// Coefficientwise product; result degree = min(deg f, deg g).
CoefficientSeries hadamard(const CoefficientSeries& f, const CoefficientSeries& g);

/// result(n) = (n+1) f(n+1); a constant maps to the zero series of degree 0.
CoefficientSeries derivative(const CoefficientSeries& f);

/// result(n) = (n+1) f(n); equals d/dz (z f(z)) coefficientwise.
CoefficientSeries r_operator(const CoefficientSeries& f);

/// result(n) = f(n) r^n. Throws std::domain_error unless 0 <= r <= 1.
CoefficientSeries scale_radius(const CoefficientSeries& f, double r);

/// Horner evaluation of f at z. Throws std::domain_error for |z| > 1.
Complex evaluate(const CoefficientSeries& f, Complex z);

CoefficientSeries add(const CoefficientSeries& f, const CoefficientSeries& g);
CoefficientSeries subtract(const CoefficientSeries& f, const CoefficientSeries& g);
CoefficientSeries scale(Complex c, const CoefficientSeries& f);

/// max_n |f(n) - g(n)| over the union of index ranges.
double max_coeff_distance(const CoefficientSeries& f, const CoefficientSeries& g);

} // namespace logbloch
