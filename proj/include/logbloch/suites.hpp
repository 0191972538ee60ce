#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logbloch/config.hpp"
#include "logbloch/report.hpp"

namespace logbloch {

/// Knobs shared by the verification suites. degrees must each be a power of
/// two minus one; count = 0 short-circuits every family-driven suite to an
/// empty report list.
struct SuiteConfig {
    std::uint64_t seed = 2026;
    std::vector<long> degrees = {1023, 2047, 4095, 8191};
    int count = 32;
    double band_inflation = 1.2;
    int threads = 0;

    double div_alpha = -0.5;
    double div_eps = 1.5;
    std::vector<long> div_m = {4, 8, 12, 16, 20};
    double div_band_bound = 4.0;

    /// Reads [verify] and [divergence] sections; missing keys keep defaults.
    /// Throws std::runtime_error on malformed values or invalid degrees.
    static SuiteConfig from_config(const Config& cfg);
};

/// Wall-clock components of a full run, for budget checks.
struct SuiteTimings {
    double decreasing_stage_seconds = 0.0;
    double phases_stage_seconds = 0.0;
    double divergence_seconds = 0.0;
    double total_seconds = 0.0;
};

/// Ratio-band checks of the norm equivalences and inequalities: coefficient
/// criteria vs direct norms, frame norms vs direct norms, block norm growth,
/// radial mean bounds, the Hardy step, the tail-sum inclusions, the
/// discretization lemma, and the moment lower bound.
std::vector<EquivalenceReport> run_equivalence_suite(const SuiteConfig& cfg);

/// Operator mapping checks: Cesaro into shifted-log and loglog targets,
/// tail-sum operator between weighted area spaces (including the power-weight
/// target), and boundedness of the duality pairing.
std::vector<EquivalenceReport> run_operator_mapping_suite(const SuiteConfig& cfg);

/// The bounded-family/divergent-functional demonstration: f_r with
/// coefficients r^k log^{-(eps+alpha)}(k+2) stays in a bounded frame-norm band
/// while the tail-sum functional at 0 grows without bound as r -> 1.
/// Requires alpha < 0 (std::domain_error otherwise); eps <= 0 means
/// "use 1 - alpha".
DivergenceReport run_divergence_demo(double alpha, double eps, const std::vector<long>& m_list,
                                     double band_bound = 4.0);

struct VerifyRun {
    std::vector<EquivalenceReport> equivalence;
    std::vector<EquivalenceReport> mapping;
    DivergenceReport divergence;
    EquivalenceReport completeness;
    bool all_pass = false;
};

/// Runs both suites plus the divergence demo off one shared feature table,
/// then cross-checks that every claim family in scope produced at least one
/// report.
VerifyRun run_all(const SuiteConfig& cfg, SuiteTimings* timings = nullptr);

/// Writes equivalence/mapping/divergence report files into out_dir with the
/// given format and returns the written paths (for determinism checks).
std::vector<std::string> write_verify_reports(const VerifyRun& run, ReportFormat format,
                                              const std::string& out_dir);

} // namespace logbloch
