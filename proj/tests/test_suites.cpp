#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "logbloch/report.hpp"
#include "logbloch/suites.hpp"

using namespace logbloch;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SuiteConfig tiny_config() {
    SuiteConfig cfg;
    cfg.degrees = {255, 511};
    cfg.count = 2;
    cfg.threads = 1;
    cfg.div_m = {2, 4};
    return cfg;
}

} // namespace

TEST_CASE("report: fixed 12-digit formatting") {
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(1.0) == "1");
    CHECK(format_real(1.0 / 3.0) == "0.333333333333");
    CHECK(format_real(-2.5) == "-2.5");
    CHECK(report_format_from_name("json") == ReportFormat::json);
    CHECK(report_format_from_name("csv") == ReportFormat::csv);
    CHECK_THROWS_AS(report_format_from_name("xml"), std::invalid_argument);
}

TEST_CASE("report: emitted files parse back and are byte-stable") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "logbloch_report_test";
    fs::create_directories(dir);

    EquivalenceReport rep;
    rep.theorem_tag = "sample_band";
    rep.alpha = -0.5;
    rep.rows = {{255, 0.5, 0.75, 1.0}, {511, 0.5, 0.8, 1.1}};
    rep.pass = true;
    rep.notes = "two rows";

    const std::string jpath = (dir / "r.json").string();
    emit_report({rep}, ReportFormat::json, jpath);
    const std::string once = slurp(jpath);
    emit_report({rep}, ReportFormat::json, jpath);
    CHECK(slurp(jpath) == once);

    const auto parsed = nlohmann::json::parse(once);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["theorem_tag"] == "sample_band");
    CHECK(parsed[0]["rows"].size() == 2);

    const std::string cpath = (dir / "r.csv").string();
    emit_report({rep}, ReportFormat::csv, cpath);
    const std::string csv = slurp(cpath);
    CHECK(csv.find("theorem_tag") != std::string::npos);
    CHECK(csv.find("sample_band") != std::string::npos);

    DivergenceReport div;
    div.alpha = -0.5;
    div.eps = 1.5;
    div.m_list = {2, 4};
    div.libera_at_zero = {1.0, 2.0};
    div.frame_norms = {3.0, 3.5};
    div.increasing = true;
    div.frame_band = 1.2;
    div.last_over_first = 2.0;
    div.pass = true;
    const std::string dpath = (dir / "d.json").string();
    emit_divergence_report(div, ReportFormat::json, dpath);
    const auto dparsed = nlohmann::json::parse(slurp(dpath));
    CHECK(dparsed["m_list"].size() == 2);
    CHECK(dparsed["increasing"] == true);
    fs::remove_all(dir);
}

TEST_CASE("suites: zero count short-circuits to empty report lists") {
    SuiteConfig cfg = tiny_config();
    cfg.count = 0;
    CHECK(run_equivalence_suite(cfg).empty());
    CHECK(run_operator_mapping_suite(cfg).empty());
}

TEST_CASE("divergence demo: frozen exact sums and monotone growth") {
    const DivergenceReport rep = run_divergence_demo(-0.5, 1.5, {0, 4, 8});
    REQUIRE(rep.libera_at_zero.size() == 3);
    // With eps + alpha = 1 the functional at r = 1 - 2^-m is the exact sum
    // sum_k r^k / ((k+1) log(k+2)); these values are direct summations.
    CHECK(rep.libera_at_zero[0] == doctest::Approx(1.44269504089).epsilon(1e-9));
    CHECK(rep.libera_at_zero[1] == doctest::Approx(2.63477303218).epsilon(1e-9));
    CHECK(rep.libera_at_zero[2] == doctest::Approx(3.40914138224).epsilon(1e-9));
    CHECK(rep.increasing);
    CHECK(rep.last_over_first ==
          doctest::Approx(rep.libera_at_zero[2] / rep.libera_at_zero[0]).epsilon(1e-12));
    CHECK(rep.frame_band >= 1.0);
    for (double v : rep.frame_norms)
        CHECK(v > 0.0);
    CHECK(rep.alpha == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(!rep.notes.empty());

    // eps <= 0 is replaced by 1 - alpha, which reproduces the same run.
    const DivergenceReport def = run_divergence_demo(-0.5, 0.0, {4});
    CHECK(def.eps == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(def.libera_at_zero[0] == doctest::Approx(rep.libera_at_zero[1]).epsilon(1e-12));
}

TEST_CASE("divergence demo: argument validation") {
    CHECK_THROWS_AS(run_divergence_demo(0.0, 1.5, {4}), std::domain_error);
    CHECK_THROWS_AS(run_divergence_demo(0.5, 1.5, {4}), std::domain_error);
    CHECK_THROWS_AS(run_divergence_demo(-0.5, 1.5, {}), std::invalid_argument);
    CHECK_THROWS_AS(run_divergence_demo(-0.5, 1.5, {25}), std::invalid_argument);
    CHECK_THROWS_AS(run_divergence_demo(-0.5, 1.5, {-1}), std::invalid_argument);
}

TEST_CASE("suites: small run covers every claim family and fills timings") {
    const SuiteConfig cfg = tiny_config();
    SuiteTimings timings;
    const VerifyRun run = run_all(cfg, &timings);

    CHECK(!run.equivalence.empty());
    CHECK(!run.mapping.empty());
    CHECK(run.completeness.pass);
    CHECK(run.completeness.theorem_tag == "suite_completeness");

    std::set<std::string> tags;
    for (const auto& r : run.equivalence) {
        CHECK(!r.theorem_tag.empty());
        tags.insert(r.theorem_tag);
    }
    for (const auto& r : run.mapping)
        tags.insert(r.theorem_tag);
    CHECK(tags.size() >= 25);

    CHECK(timings.total_seconds > 0.0);
    CHECK(timings.total_seconds >=
          timings.decreasing_stage_seconds + timings.phases_stage_seconds);
    CHECK(run.divergence.m_list == cfg.div_m);

    // Every row of every report carries finite ordered ratio statistics.
    for (const auto& r : run.equivalence)
        for (const auto& row : r.rows) {
            CHECK(row.ratio_min <= row.ratio_median);
            CHECK(row.ratio_median <= row.ratio_max);
        }
}

TEST_CASE("suites: identical configs produce byte-identical report files") {
    namespace fs = std::filesystem;
    const fs::path base = fs::temp_directory_path() / "logbloch_determinism_test";
    fs::remove_all(base);

    const SuiteConfig cfg = tiny_config();
    const VerifyRun run_a = run_all(cfg);
    const VerifyRun run_b = run_all(cfg);

    for (ReportFormat fmt : {ReportFormat::json, ReportFormat::csv}) {
        const std::string sub = fmt == ReportFormat::json ? "j" : "c";
        const auto paths_a = write_verify_reports(run_a, fmt, (base / (sub + "_a")).string());
        const auto paths_b = write_verify_reports(run_b, fmt, (base / (sub + "_b")).string());
        REQUIRE(paths_a.size() == paths_b.size());
        REQUIRE(paths_a.size() == 3);
        for (std::size_t i = 0; i < paths_a.size(); ++i)
            CHECK(slurp(paths_a[i]) == slurp(paths_b[i]));
    }
    fs::remove_all(base);
}
