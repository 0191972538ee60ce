#pragma once

#include <complex>
#include <vector>

namespace logbloch {

/// In-place iterative radix-2 transform. `a.size()` must be a power of two.
/// sign = +1 computes X_j = sum_n a_n exp(+2*pi*i*n*j/N) (the direction used
/// to sample a polynomial on a circle), sign = -1 the conjugate transform.
/// No normalization is applied in either direction.
void fft_radix2(std::vector<std::complex<double>>& a, int sign);

/// Samples of sum_n c_n (r e^{i theta_j})^n at theta_j = 2*pi*j/K, j = 0..K-1.
/// K must be a power of two with K > degree; coefficients beyond K are not
/// permitted (they would alias).
std::vector<std::complex<double>> circle_samples(const std::vector<std::complex<double>>& coeffs,
                                                 double r, std::size_t K);

bool is_pow2(std::size_t k);
std::size_t next_pow2(std::size_t k);

} // namespace logbloch
