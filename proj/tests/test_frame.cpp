#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "logbloch/bump.hpp"
#include "logbloch/frame.hpp"
#include "logbloch/quadrature.hpp"
#include "logbloch/series.hpp"

using namespace logbloch;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

CoefficientSeries random_series(int degree, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c)
        v = Complex(u(rng), u(rng));
    return CoefficientSeries(std::move(c));
}

} // namespace

TEST_CASE("bump: cutoff plateau, transition midpoint, induced block profile") {
    for (const char* name : {"default", "quintic"}) {
        const BumpFunction b = BumpFunction::by_name(name);
        CHECK(b.omega(0.0) == 1.0);
        CHECK(b.omega(1.0) == 1.0);
        CHECK(b.omega(2.0) == 0.0);
        CHECK(b.omega(3.0) == 0.0);
        CHECK(b.omega(1.5) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(b.omega(1.2) > b.omega(1.5));
        CHECK(b.omega(1.5) > b.omega(1.8));

        CHECK(b.phi(1.0) == doctest::Approx(0.0).scale(1.0));
        CHECK(b.phi(2.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(b.phi(4.0) == doctest::Approx(0.0).scale(1.0));
        CHECK(b.phi(0.5) == doctest::Approx(0.0).scale(1.0));
        // Two-scale telescope: phi(t) + phi(2t) = omega(t/2) - omega(2t) = 1
        // on [1, 2].
        CHECK(b.phi(1.3) + b.phi(2.6) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(!b.description().empty());
    }
    CHECK_THROWS_AS(BumpFunction::by_name("triangular"), std::invalid_argument);
}

TEST_CASE("frame: block structure and supports") {
    const Frame frame(6);
    CHECK(frame.n_max() == 6);

    const FramePolynomial& v0 = frame.block(0);
    CHECK(v0.support_lo == 0);
    CHECK(v0.support_hi == 1);
    CHECK(v0.poly.coeff(0) == Complex(1.0, 0.0));
    CHECK(v0.poly.coeff(1) == Complex(1.0, 0.0));

    for (int n = 1; n <= 6; ++n) {
        const FramePolynomial& vb = frame.block(n);
        CHECK(vb.n == n);
        CHECK(vb.support_lo == (1 << (n - 1)));
        CHECK(vb.support_hi == (1 << (n + 1)) - 1);
        // The peak of the profile sits at 2^n where phi(2) = 1.
        CHECK(vb.poly.coeff(1 << n) == Complex(1.0, 0.0));
        // The left edge carries phi(1) = 0, so the first active index is
        // 2^{n-1} + 1.
        CHECK(vb.poly.coeff(1 << (n - 1)) == Complex(0.0, 0.0));
        CHECK(vb.poly.top_nonzero() <= vb.support_hi);
    }
    CHECK_THROWS_AS(frame.block(7), std::out_of_range);

    CHECK(frame.covers(63));
    CHECK(!frame.covers(64));
}

TEST_CASE("frame: decomposition blocks sum back to the series exactly") {
    const Frame frame(6);
    const CoefficientSeries f = random_series(63, 99);
    const auto blocks = frame_decompose(f, frame);
    REQUIRE(blocks.size() == 7);
    CoefficientSeries acc = CoefficientSeries::zero(f.degree());
    for (const auto& b : blocks)
        acc = add(acc, b);
    // The two phi values covering each index telescope to 1 up to one
    // rounding each, so the reconstruction error sits at ulp scale.
    CHECK(max_coeff_distance(acc, f) <= 1e-14);

    CHECK_THROWS_AS(frame_decompose(random_series(64, 7), frame), std::out_of_range);
}

TEST_CASE("frame: far blocks have disjoint supports") {
    const Frame frame(6);
    for (int n = 0; n <= 6; ++n)
        for (int j = 0; j <= 6; ++j) {
            const CoefficientSeries prod = hadamard(frame.vn(n), frame.vn(j));
            if (std::abs(n - j) >= 2)
                CHECK(prod.top_nonzero() == -1);
            else if (n == j)
                CHECK(prod.top_nonzero() >= 0);
        }
}

TEST_CASE("frame: neighborhood sums reproduce the center block") {
    const Frame frame(6);
    for (int n = 0; n <= 5; ++n) {
        const CoefficientSeries pn = build_pn(n, frame);
        const CoefficientSeries back = hadamard(pn, frame.vn(n));
        CHECK(max_coeff_distance(back, frame.vn(n)) <= 1e-14);
    }
    CHECK_THROWS_AS(build_pn(6, frame), std::out_of_range);
    CHECK_THROWS_AS(build_pn(-1, frame), std::out_of_range);
}

TEST_CASE("frame: indicator windows and their cut blocks") {
    CHECK_THROWS_AS(delta_polynomial(0, 1), std::out_of_range);
    CHECK_THROWS_AS(delta_polynomial(3, 3), std::out_of_range);
    CHECK_THROWS_AS(delta_polynomial(3, 17), std::out_of_range);

    const CoefficientSeries d = delta_polynomial(3, 10);
    CHECK(d.coeff(3) == Complex(0.0, 0.0));
    for (int k = 4; k <= 10; ++k)
        CHECK(d.coeff(k) == Complex(1.0, 0.0));
    CHECK(d.degree() == 10);

    // Window-cut blocks stay within the partial-sum growth bound.
    const Frame frame(6);
    for (int n = 2; n <= 5; ++n) {
        double worst = 0.0;
        for (int k = (1 << (n - 1)) + 1; k <= (1 << (n + 1)); ++k) {
            const CoefficientSeries qk = hadamard(frame.vn(n), delta_polynomial(n, k));
            worst = std::max(worst, hardy_norm(qk, 1.0));
        }
        CHECK(worst <= static_cast<double>(n + 1));
        CHECK(worst > 0.0);
    }
}

TEST_CASE("frame: block norm growth rates by exponent") {
    const Frame frame(6);
    // Mean of |1+e^{i t}| is 4/pi.
    CHECK(hardy_norm(frame.vn(0), 1.0) == doctest::Approx(4.0 / std::numbers::pi).epsilon(1e-5));

    // Sup norms grow like 2^n with ratio 3/4 for this cutoff.
    for (int n = 3; n <= 5; ++n)
        CHECK(hardy_norm(frame.vn(n), kInf) / std::ldexp(1.0, n) ==
              doctest::Approx(0.75).epsilon(1e-6));

    // Quadratic means grow like 2^{n/2}; the profile keeps the ratio in a
    // narrow band.
    for (int n = 2; n <= 5; ++n) {
        const double ratio = hardy_norm(frame.vn(n), 2.0) / std::pow(2.0, 0.5 * n);
        CHECK(ratio > 0.770);
        CHECK(ratio < 0.792);
    }

    // Area norms stay bounded; the largest block here lands near 1.24.
    CHECK(hardy_norm(frame.vn(5), 1.0) == doctest::Approx(1.24090515434).epsilon(1e-4));
    for (int n = 1; n <= 5; ++n)
        CHECK(hardy_norm(frame.vn(n), 1.0) < 1.5);
}

TEST_CASE("frame: alternative cutoff still reconstructs") {
    const Frame frame(5, BumpFunction::quintic());
    const CoefficientSeries f = random_series(31, 123);
    const auto blocks = frame_decompose(f, frame);
    CoefficientSeries acc = CoefficientSeries::zero(f.degree());
    for (const auto& b : blocks)
        acc = add(acc, b);
    CHECK(max_coeff_distance(acc, f) <= 1e-15);
}
