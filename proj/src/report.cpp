#include "logbloch/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace logbloch {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += '"';
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open report file for writing: " + path);
    }
    return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw std::runtime_error("error writing report file: " + path);
    }
}

void write_equivalence_json(std::ostream& out, const EquivalenceReport& r,
                            const char* indent) {
    out << indent << "{\n";
    out << indent << "  \"theorem_tag\": \"" << json_escape(r.theorem_tag) << "\",\n";
    out << indent << "  \"alpha\": " << format_real(r.alpha) << ",\n";
    out << indent << "  \"pass\": " << (r.pass ? "true" : "false") << ",\n";
    out << indent << "  \"notes\": \"" << json_escape(r.notes) << "\",\n";
    out << indent << "  \"rows\": [";
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const RatioRow& row = r.rows[i];
        if (i) out << ",";
        out << "\n"
            << indent << "    {\"degree\": " << row.degree
            << ", \"ratio_min\": " << format_real(row.ratio_min)
            << ", \"ratio_median\": " << format_real(row.ratio_median)
            << ", \"ratio_max\": " << format_real(row.ratio_max) << "}";
    }
    if (!r.rows.empty()) out << "\n" << indent << "  ";
    out << "]\n";
    out << indent << "}";
}

} // namespace

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw std::invalid_argument("unknown report format: " + name);
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

void emit_report(const std::vector<EquivalenceReport>& reports, ReportFormat format,
                 const std::string& path) {
    std::ofstream out = open_out(path);
    if (format == ReportFormat::json) {
        out << "[";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            if (i) out << ",";
            out << "\n";
            write_equivalence_json(out, reports[i], "  ");
        }
        if (!reports.empty()) out << "\n";
        out << "]\n";
    } else {
        out << "theorem_tag,alpha,degree,ratio_min,ratio_median,ratio_max,pass,notes\n";
        for (const EquivalenceReport& r : reports) {
            for (const RatioRow& row : r.rows) {
                out << csv_escape(r.theorem_tag) << ',' << format_real(r.alpha) << ','
                    << row.degree << ',' << format_real(row.ratio_min) << ','
                    << format_real(row.ratio_median) << ',' << format_real(row.ratio_max)
                    << ',' << (r.pass ? "true" : "false") << ',' << csv_escape(r.notes)
                    << '\n';
            }
            if (r.rows.empty()) {
                out << csv_escape(r.theorem_tag) << ',' << format_real(r.alpha)
                    << ",,,,," << (r.pass ? "true" : "false") << ',' << csv_escape(r.notes)
                    << '\n';
            }
        }
    }
    finish_out(out, path);
}

void emit_divergence_report(const DivergenceReport& report, ReportFormat format,
                            const std::string& path) {
    std::ofstream out = open_out(path);
    if (format == ReportFormat::json) {
        out << "{\n";
        out << "  \"alpha\": " << format_real(report.alpha) << ",\n";
        out << "  \"eps\": " << format_real(report.eps) << ",\n";
        out << "  \"increasing\": " << (report.increasing ? "true" : "false") << ",\n";
        out << "  \"frame_band\": " << format_real(report.frame_band) << ",\n";
        out << "  \"last_over_first\": " << format_real(report.last_over_first) << ",\n";
        out << "  \"pass\": " << (report.pass ? "true" : "false") << ",\n";
        out << "  \"notes\": \"" << json_escape(report.notes) << "\",\n";
        out << "  \"rows\": [";
        for (std::size_t i = 0; i < report.m_list.size(); ++i) {
            if (i) out << ",";
            out << "\n    {\"m\": " << report.m_list[i]
                << ", \"libera_at_zero\": " << format_real(report.libera_at_zero[i])
                << ", \"frame_norm\": " << format_real(report.frame_norms[i]) << "}";
        }
        if (!report.m_list.empty()) out << "\n  ";
        out << "]\n}\n";
    } else {
        out << "m,libera_at_zero,frame_norm\n";
        for (std::size_t i = 0; i < report.m_list.size(); ++i) {
            out << report.m_list[i] << ',' << format_real(report.libera_at_zero[i]) << ','
                << format_real(report.frame_norms[i]) << '\n';
        }
    }
    finish_out(out, path);
}

void print_report_summary(std::ostream& out, const std::vector<EquivalenceReport>& reports) {
    for (const EquivalenceReport& r : reports) {
        out << (r.pass ? "PASS " : "FAIL ") << r.theorem_tag << " alpha=" << format_real(r.alpha);
        if (!r.rows.empty()) {
            const RatioRow& last = r.rows.back();
            out << " degree=" << last.degree << " ratios=[" << format_real(last.ratio_min)
                << ", " << format_real(last.ratio_median) << ", " << format_real(last.ratio_max)
                << "]";
        }
        if (!r.notes.empty()) out << " (" << r.notes << ")";
        out << "\n";
    }
}

void print_divergence_summary(std::ostream& out, const DivergenceReport& report) {
    out << (report.pass ? "PASS " : "FAIL ") << "divergence demo alpha="
        << format_real(report.alpha) << " eps=" << format_real(report.eps) << "\n";
    for (std::size_t i = 0; i < report.m_list.size(); ++i) {
        out << "  m=" << report.m_list[i]
            << "  libera_at_zero=" << format_real(report.libera_at_zero[i])
            << "  frame_norm=" << format_real(report.frame_norms[i]) << "\n";
    }
    out << "  increasing=" << (report.increasing ? "true" : "false")
        << " frame_band=" << format_real(report.frame_band)
        << " last_over_first=" << format_real(report.last_over_first) << "\n";
}

} // namespace logbloch
