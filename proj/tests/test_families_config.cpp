#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "logbloch/config.hpp"
#include "logbloch/criteria.hpp"
#include "logbloch/families.hpp"
#include "logbloch/series.hpp"
#include "logbloch/suites.hpp"

using namespace logbloch;

TEST_CASE("families: kind names roundtrip") {
    for (FamilyKind k : {FamilyKind::random_decreasing, FamilyKind::random_phases,
                         FamilyKind::lacunary, FamilyKind::geometric_like, FamilyKind::logpower})
        CHECK(family_kind_from_name(family_kind_name(k)) == k);
    CHECK_THROWS_AS(family_kind_from_name("chirp"), std::invalid_argument);
}

TEST_CASE("families: members are deterministic in spec and index") {
    TestFamilySpec spec;
    spec.kind = FamilyKind::random_phases;
    spec.degree = 255;
    spec.seed = 42;
    const CoefficientSeries a = family_member(spec, 3);
    const CoefficientSeries b = family_member(spec, 3);
    CHECK(max_coeff_distance(a, b) == 0.0);

    const CoefficientSeries c = family_member(spec, 4);
    CHECK(max_coeff_distance(a, c) > 0.0);

    spec.seed = 43;
    const CoefficientSeries d = family_member(spec, 3);
    CHECK(max_coeff_distance(a, d) > 0.0);

    const auto fam = generate_family(spec);
    CHECK(fam.size() == static_cast<std::size_t>(spec.count));
    CHECK(max_coeff_distance(fam[3], d) == 0.0);
}

TEST_CASE("families: shape invariants per kind") {
    TestFamilySpec spec;
    spec.degree = 127;
    spec.seed = 7;

    spec.kind = FamilyKind::random_decreasing;
    const CoefficientSeries dec = family_member(spec, 0);
    std::vector<double> re;
    for (int n = 0; n <= dec.degree(); ++n) {
        re.push_back(dec.coeff(n).real());
        CHECK(dec.coeff(n).imag() == 0.0);
    }
    CHECK(monotone_check(re).ok);
    CHECK(re.front() > 0.0);

    spec.kind = FamilyKind::random_phases;
    const CoefficientSeries ph = family_member(spec, 1);
    for (int n = 0; n <= ph.degree(); ++n)
        CHECK(std::abs(ph.coeff(n)) ==
              doctest::Approx(1.0 / static_cast<double>(n + 1)).epsilon(1e-14));

    spec.kind = FamilyKind::lacunary;
    const CoefficientSeries lac = family_member(spec, 2);
    for (int n = 0; n <= lac.degree(); ++n) {
        const double mag = std::abs(lac.coeff(n));
        const bool dyadic = n > 0 && (n & (n - 1)) == 0;
        if (dyadic)
            CHECK(mag == doctest::Approx(1.0).epsilon(1e-14));
        else
            CHECK(mag == 0.0);
    }
    CHECK_THROWS_AS(family_member(spec, 99), std::out_of_range);

    spec.kind = FamilyKind::geometric_like;
    const CoefficientSeries geo = family_member(spec, 3);
    CHECK(geo.coeff(0).real() > 0.0);
    CHECK(std::abs(geo.coeff(127)) < std::abs(geo.coeff(0)));

    spec.kind = FamilyKind::logpower;
    spec.eps = 1.5;
    spec.alpha = -0.5;
    const CoefficientSeries lp = family_member(spec, 0);
    CHECK(lp.coeff(0).real() == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-14));
    CHECK(lp.coeff(100).real() == doctest::Approx(1.0 / std::log(102.0)).epsilon(1e-14));
    // Every index draws the same fixed sequence.
    CHECK(max_coeff_distance(lp, family_member(spec, 5)) == 0.0);
}

TEST_CASE("families: seed mixer spreads nearby seeds") {
    CHECK(mix64(1) != mix64(2));
    CHECK(mix64(0) != 0);
}

TEST_CASE("config: sections, comments, typed getters") {
    const Config cfg = Config::parse_string("top = 1\n"
                                            "# comment line\n"
                                            "[verify]\n"
                                            "seed = 99\n"
                                            "degrees = 255, 511\n"
                                            "ratio = 1.25\n"
                                            "flag = true\n"
                                            "; another comment\n"
                                            "[divergence]\n"
                                            "alpha = -0.5\n");
    CHECK(cfg.has("", "top"));
    CHECK(cfg.get_int("", "top") == 1);
    CHECK(cfg.get_uint64("verify", "seed", 0) == 99);
    CHECK(cfg.get_real("verify", "ratio") == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(cfg.get_bool("verify", "flag", false));
    CHECK(cfg.get_real("divergence", "alpha") == doctest::Approx(-0.5).epsilon(1e-15));

    const auto degrees = cfg.get_int_list("verify", "degrees", {});
    REQUIRE(degrees.size() == 2);
    CHECK(degrees[0] == 255);
    CHECK(degrees[1] == 511);

    CHECK(cfg.get_int("verify", "missing", 7) == 7);
    CHECK_THROWS_AS(cfg.get_int("verify", "missing"), std::runtime_error);
    CHECK_THROWS_AS(cfg.get_int("verify", "ratio"), std::runtime_error);

    const auto names = cfg.section_names();
    CHECK(names.size() == 3);
    const auto keys = cfg.keys("verify");
    CHECK(keys.size() == 4);
}

TEST_CASE("config: file parsing") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "logbloch_config_test.cfg";
    {
        std::ofstream out(path);
        out << "[verify]\ncount = 12\n";
    }
    const Config cfg = Config::parse_file(path.string());
    CHECK(cfg.get_int("verify", "count") == 12);
    fs::remove(path);
    CHECK_THROWS_AS(Config::parse_file((fs::temp_directory_path() / "missing.cfg").string()),
                    std::runtime_error);
}

TEST_CASE("suite config: defaults, overrides, validation") {
    const SuiteConfig defaults = SuiteConfig::from_config(Config::parse_string(""));
    CHECK(defaults.seed == 2026);
    CHECK(defaults.count == 32);
    CHECK(defaults.degrees == std::vector<long>{1023, 2047, 4095, 8191});
    CHECK(defaults.div_alpha == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(defaults.div_m == std::vector<long>{4, 8, 12, 16, 20});

    const SuiteConfig tuned = SuiteConfig::from_config(
        Config::parse_string("[verify]\n"
                             "seed = 5\n"
                             "degrees = 127, 255\n"
                             "count = 3\n"
                             "band_inflation = 1.5\n"
                             "threads = 2\n"
                             "[divergence]\n"
                             "alpha = -1\n"
                             "eps = 2\n"
                             "m_list = 2, 6\n"
                             "band_bound = 8\n"));
    CHECK(tuned.seed == 5);
    CHECK(tuned.degrees == std::vector<long>{127, 255});
    CHECK(tuned.count == 3);
    CHECK(tuned.band_inflation == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(tuned.threads == 2);
    CHECK(tuned.div_alpha == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(tuned.div_eps == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(tuned.div_m == std::vector<long>{2, 6});
    CHECK(tuned.div_band_bound == doctest::Approx(8.0).epsilon(1e-15));

    // Degrees must be powers of two minus one.
    CHECK_THROWS_AS(
        SuiteConfig::from_config(Config::parse_string("[verify]\ndegrees = 1000\n")),
        std::runtime_error);
    CHECK_THROWS_AS(
        SuiteConfig::from_config(Config::parse_string("[verify]\ncount = -2\n")),
        std::runtime_error);
    CHECK_THROWS_AS(
        SuiteConfig::from_config(Config::parse_string("[verify]\nband_inflation = 0.5\n")),
        std::runtime_error);
    CHECK_THROWS_AS(
        SuiteConfig::from_config(Config::parse_string("[divergence]\nalpha = 0.5\n")),
        std::runtime_error);
    CHECK_THROWS_AS(
        SuiteConfig::from_config(Config::parse_string("[divergence]\nm_list = 30\n")),
        std::runtime_error);
}
