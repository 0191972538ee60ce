#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "logbloch/fft.hpp"
#include "logbloch/quadrature.hpp"
#include "logbloch/series.hpp"
#include "logbloch/weights.hpp"

using namespace logbloch;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Complex> random_coeffs(int degree, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c)
        v = Complex(u(rng), u(rng));
    return c;
}

} // namespace

TEST_CASE("fft: matches the quadratic-time transform") {
    const std::size_t N = 16;
    std::vector<Complex> a = random_coeffs(static_cast<int>(N) - 1, 7);
    std::vector<Complex> naive(N, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < N; ++j)
        for (std::size_t n = 0; n < N; ++n) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>(n * j) / static_cast<double>(N);
            naive[j] += a[n] * Complex(std::cos(ang), std::sin(ang));
        }
    std::vector<Complex> b = a;
    fft_radix2(b, +1);
    for (std::size_t j = 0; j < N; ++j)
        CHECK(std::abs(b[j] - naive[j]) <= 1e-12);

    // Forward then conjugate transform recovers N times the input.
    fft_radix2(b, -1);
    for (std::size_t n = 0; n < N; ++n)
        CHECK(std::abs(b[n] - 16.0 * a[n]) <= 1e-12);
}

TEST_CASE("fft: circle samples agree with direct evaluation") {
    const CoefficientSeries f(random_coeffs(9, 13));
    const double r = 0.9375;
    const std::size_t K = 32;
    const auto s = circle_samples(f.coeffs(), r, K);
    REQUIRE(s.size() == K);
    for (std::size_t j : {std::size_t{0}, std::size_t{5}, std::size_t{17}, std::size_t{31}}) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(K);
        const Complex z = r * Complex(std::cos(ang), std::sin(ang));
        CHECK(std::abs(s[j] - evaluate(f, z)) <= 1e-13);
    }
    CHECK(is_pow2(64));
    CHECK(!is_pow2(48));
    CHECK(next_pow2(17) == 32);
    CHECK(next_pow2(32) == 32);
}

TEST_CASE("quadrature: explicit-count mean validates its arguments") {
    const CoefficientSeries f = CoefficientSeries::ones(10);
    CHECK_THROWS_AS(integral_mean(f, 0.5, 1.0, 24), std::invalid_argument);   // not a power of two
    CHECK_THROWS_AS(integral_mean(f, 0.5, 1.0, 16), std::invalid_argument);   // below 2*deg+2
    CHECK_THROWS_AS(integral_mean(f, 1.5, 1.0, 32), std::domain_error);
    CHECK_THROWS_AS(integral_mean(f, 0.5, 0.0, 32), std::domain_error);
    CHECK_THROWS_AS(integral_mean(f, 0.5, -2.0, 32), std::domain_error);
    CHECK(integral_mean(f, 0.5, 1.0, 32) > 0.0);
}

TEST_CASE("quadrature: sampled quadratic mean reproduces the coefficient formula") {
    // |f|^2 on the circle is a trigonometric polynomial, so uniform sampling
    // at K >= 2*deg+2 integrates it with zero aliasing error.
    const CoefficientSeries f(random_coeffs(100, 21));
    for (double r : {0.3, 0.8, 1.0}) {
        double sum = 0.0;
        double rn = 1.0;
        for (int k = 0; k <= f.degree(); ++k) {
            sum += std::norm(f.coeff(k)) * rn * rn;
            rn *= r;
        }
        const double coeff_side = std::sqrt(sum);
        const double quad_side = integral_mean(f, r, 2.0, 256);
        CHECK(quad_side == doctest::Approx(coeff_side).epsilon(1e-13));
    }
}

TEST_CASE("quadrature: monomial means are exact powers for every p") {
    const CoefficientSeries f = CoefficientSeries::monomial(9, Complex(0.0, 2.0));
    for (double p : {1.0, 2.0, 3.5, kInf}) {
        const MeanResult m = integral_mean_auto(f, 0.5, p);
        CHECK(m.value == doctest::Approx(2.0 * std::pow(0.5, 9)).epsilon(1e-14));
    }
    const MeanResult zero = integral_mean_auto(CoefficientSeries::zero(5), 0.7, 1.0);
    CHECK(zero.value == 0.0);
}

TEST_CASE("quadrature: closed forms for 1 + z") {
    const CoefficientSeries f = CoefficientSeries::ones(1);
    // (1/2pi) int |1+e^{i t}| dt = 4/pi.
    CHECK(integral_mean_auto(f, 1.0, 1.0).value ==
          doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-5));
    CHECK(integral_mean_auto(f, 1.0, 2.0).value ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(integral_mean_auto(f, 1.0, kInf).value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(hardy_norm(f, 1.0) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-5));
    CHECK(hardy_norm(CoefficientSeries::monomial(6), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hardy_norm(CoefficientSeries::monomial(6), kInf) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("quadrature: quick mean tracks the adaptive one on smooth input") {
    const CoefficientSeries f(random_coeffs(63, 5));
    for (double p : {1.0, kInf}) {
        const double a = integral_mean_auto(f, 0.9, p).value;
        const double q = integral_mean_quick(f, 0.9, p).value;
        CHECK(q == doctest::Approx(a).epsilon(1e-5));
    }
    CHECK(integral_mean_quick(f, 0.9, 2.0).value ==
          doctest::Approx(integral_mean_auto(f, 0.9, 2.0).value).epsilon(1e-15));
}

TEST_CASE("quadrature: radial grid integrates its own measures") {
    const RadialGrid grid = make_radial_grid();
    REQUIRE(!grid.nodes.empty());
    CHECK(grid.transform.find("log(2/(1-r))") != std::string::npos);
    CHECK(grid.nodes.front() < 0.01);
    CHECK(grid.nodes.back() > 1.0 - 1e-12);

    double dr = 0.0;
    for (double w : grid.weights)
        dr += w;
    CHECK(dr == doctest::Approx(1.0).epsilon(1e-10));

    double du = 0.0;
    for (double w : grid.u_weights)
        du += w;
    CHECK(du == doctest::Approx(grid.u_hi - grid.u_lo).epsilon(1e-12));

    // The companion rule covers the same panels.
    double dr_check = 0.0;
    for (double w : grid.check_weights)
        dr_check += w;
    CHECK(dr_check == doctest::Approx(dr).epsilon(1e-9));
}
