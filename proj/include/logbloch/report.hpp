#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logbloch {

struct RatioRow {
    long degree = 0;
    double ratio_min = 0.0;
    double ratio_median = 0.0;
    double ratio_max = 0.0;
};

/// Two-sided comparison statistics for one claim at one alpha, across the
/// degree sweep. pass semantics are set by the suite that fills it in.
struct EquivalenceReport {
    std::string theorem_tag;
    double alpha = 0.0;
    std::vector<RatioRow> rows;
    bool pass = false;
    std::string notes;
};

struct DivergenceReport {
    double alpha = 0.0;
    double eps = 0.0;
    std::vector<long> m_list;
    std::vector<double> libera_at_zero;
    std::vector<double> frame_norms;
    bool increasing = false;
    double frame_band = 0.0;
    double last_over_first = 0.0;
    bool pass = false;
    std::string notes;
};

enum class ReportFormat { json, csv };

ReportFormat report_format_from_name(const std::string& name);

/// Fixed 12-significant-digit decimal formatting; the basis of byte-stable
/// report files.
std::string format_real(double x);

/// Writes reports to `path` with stable key order and formatting. Values are
/// expected finite. Throws std::runtime_error with path context on I/O errors.
void emit_report(const std::vector<EquivalenceReport>& reports, ReportFormat format,
                 const std::string& path);

void emit_divergence_report(const DivergenceReport& report, ReportFormat format,
                            const std::string& path);

/// One human-readable PASS/FAIL line per report.
void print_report_summary(std::ostream& out, const std::vector<EquivalenceReport>& reports);
void print_divergence_summary(std::ostream& out, const DivergenceReport& report);

} // namespace logbloch
