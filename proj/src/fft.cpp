#include "logbloch/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace logbloch {

bool is_pow2(std::size_t k) {
    return k != 0 && (k & (k - 1)) == 0;
}

std::size_t next_pow2(std::size_t k) {
    std::size_t p = 1;
    while (p < k)
        p <<= 1;
    return p;
}

void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n))
        throw std::invalid_argument("fft_radix2: size must be a power of two");
    if (n == 1)
        return;

    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                std::complex<double> u = a[i + j];
                std::complex<double> v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<std::complex<double>> circle_samples(const std::vector<std::complex<double>>& coeffs,
                                                 double r, std::size_t K) {
    if (!is_pow2(K))
        throw std::invalid_argument("circle_samples: K must be a power of two");
    if (K < coeffs.size())
        throw std::invalid_argument("circle_samples: K below coefficient count");

    std::vector<std::complex<double>> a(K, std::complex<double>(0.0, 0.0));
    double rn = 1.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        a[n] = coeffs[n] * rn;
        rn *= r;
    }
    fft_radix2(a, +1);
    return a;
}

} // namespace logbloch
