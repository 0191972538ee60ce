#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "logbloch/operators.hpp"
#include "logbloch/series.hpp"

using namespace logbloch;

namespace {

CoefficientSeries random_series(int degree, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c)
        v = Complex(u(rng), u(rng));
    return CoefficientSeries(std::move(c));
}

} // namespace

TEST_CASE("cesaro: running averages") {
    const CoefficientSeries ones = CoefficientSeries::ones(5);
    const CoefficientSeries c = cesaro(ones);
    CHECK(c.degree() == 5);
    for (int n = 0; n <= 5; ++n)
        CHECK(c.coeff(n) == Complex(1.0, 0.0));

    const CoefficientSeries m = cesaro(CoefficientSeries::monomial(2));
    CHECK(m.coeff(0) == Complex(0.0, 0.0));
    CHECK(m.coeff(1) == Complex(0.0, 0.0));
    CHECK(m.coeff(2).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(m.coeff(2).imag() == 0.0);
    CHECK(m.degree() == 2);
}

TEST_CASE("tail sums: monomial spreads its mass evenly") {
    const CoefficientSeries one = CoefficientSeries::from_real({1.0});
    const CoefficientSeries l1 = libera_coeff(one);
    CHECK(l1.degree() == 0);
    CHECK(l1.coeff(0) == Complex(1.0, 0.0));

    // For z^k every index up to k receives 1/(k+1).
    for (int k : {1, 2, 7}) {
        const CoefficientSeries lk = libera_coeff(CoefficientSeries::monomial(k));
        CHECK(lk.degree() == k);
        for (int n = 0; n <= k; ++n)
            CHECK(lk.coeff(n).real() ==
                  doctest::Approx(1.0 / static_cast<double>(k + 1)).epsilon(1e-15));
    }
}

TEST_CASE("adjointness: prefix-average and tail-sum operators pair exactly") {
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        const CoefficientSeries f = random_series(63, seed);
        const CoefficientSeries g = random_series(63, seed + 100);
        const Complex lhs = pairing(cesaro(f), g).value;
        const Complex rhs = pairing(f, libera_coeff(g)).value;
        CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("pairing: shared modes only") {
    const CoefficientSeries f = CoefficientSeries::from_real({1.0, 2.0, 3.0});
    const CoefficientSeries g = CoefficientSeries::from_real({4.0, 5.0});
    const PairingValue pv = pairing(f, g);
    CHECK(pv.terms == 2);
    CHECK(pv.value == Complex(14.0, 0.0));
}

TEST_CASE("tail sums: integral form matches the coefficient form") {
    const CoefficientSeries g = random_series(16, 9);
    const CoefficientSeries lg = libera_coeff(g);
    for (const Complex z : {Complex(0.0, 0.0), Complex(0.3, 0.4), Complex(-0.7, 0.1)}) {
        const Complex direct = evaluate(lg, z);
        const Complex integral = libera_integral(g, z, 32);
        CHECK(std::abs(direct - integral) <= 1e-12 * (1.0 + std::abs(direct)));
    }
    CHECK_THROWS_AS(libera_integral(g, Complex(1.0, 0.0), 32), std::domain_error);
    CHECK_THROWS_AS(libera_integral(g, Complex(0.8, 0.7), 32), std::domain_error);
}

TEST_CASE("coefficient tail norm") {
    const CoefficientSeries f = CoefficientSeries::from_real({1.0, 1.0});
    CHECK(ell1_minus1_norm(f) == doctest::Approx(1.5).epsilon(1e-16));
    CHECK(ell1_minus1_norm(CoefficientSeries::zero(9)) == 0.0);
    const CoefficientSeries g(std::vector<Complex>{Complex(0.0, -3.0)});
    CHECK(ell1_minus1_norm(g) == doctest::Approx(3.0).epsilon(1e-16));
}

TEST_CASE("hardy step: closed form for a single mode and positivity in general") {
    // pi M_1(r, z) - r/2 = r (pi - 1/2).
    CHECK(hardy_inequality_gap(CoefficientSeries::monomial(1), 0.5) ==
          doctest::Approx(0.5 * (std::numbers::pi - 0.5)).epsilon(1e-9));
    CHECK_THROWS_AS(hardy_inequality_gap(CoefficientSeries::monomial(1), 1.5), std::domain_error);
    CHECK_THROWS_AS(hardy_inequality_gap(CoefficientSeries::monomial(1), -0.1), std::domain_error);

    for (unsigned seed : {11u, 12u, 13u})
        for (double r : {0.5, 0.9, 0.99, 1.0})
            CHECK(hardy_inequality_gap(random_series(127, seed), r) >= -1e-9);
}

TEST_CASE("derivative mean bound: closed form for z and positivity in general") {
    // For f = z: bound side 2, operator side 1/4.
    CHECK(libera_derivative_bound_gap(CoefficientSeries::monomial(1), 0.5) ==
          doctest::Approx(1.75).epsilon(1e-9));
    CHECK_THROWS_AS(libera_derivative_bound_gap(CoefficientSeries::monomial(1), 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(libera_derivative_bound_gap(CoefficientSeries::monomial(1), 1.0),
                    std::domain_error);

    for (unsigned seed : {21u, 22u})
        for (double r : {0.5, 0.9, 0.99})
            CHECK(libera_derivative_bound_gap(random_series(127, seed), r) >= -1e-8);
}
