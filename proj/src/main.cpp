#include <cmath>
#include <cstdio>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logbloch/config.hpp"
#include "logbloch/criteria.hpp"
#include "logbloch/frame.hpp"
#include "logbloch/operators.hpp"
#include "logbloch/quadrature.hpp"
#include "logbloch/report.hpp"
#include "logbloch/series_io.hpp"
#include "logbloch/suites.hpp"

namespace {

using namespace logbloch;

double parse_p(const std::string& text) {
    if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
    return std::stod(text);
}

int cmd_verify(const std::string& config_path, const std::string& out_dir,
               const std::string& format_name) {
    SuiteConfig cfg;
    if (!config_path.empty()) {
        cfg = SuiteConfig::from_config(Config::parse_file(config_path));
    }
    const ReportFormat format = report_format_from_name(format_name);
    SuiteTimings tm;
    const VerifyRun run = run_all(cfg, &tm);
    const std::vector<std::string> paths = write_verify_reports(run, format, out_dir);

    print_report_summary(std::cout, run.equivalence);
    print_report_summary(std::cout, run.mapping);
    print_divergence_summary(std::cout, run.divergence);
    print_report_summary(std::cout, {run.completeness});
    for (const std::string& p : paths) std::cout << "wrote " << p << "\n";
    std::printf("stages: families %.1fs + %.1fs, divergence %.1fs, total %.1fs\n",
                tm.decreasing_stage_seconds, tm.phases_stage_seconds, tm.divergence_seconds,
                tm.total_seconds);
    std::cout << (run.all_pass ? "ALL SUITES PASS" : "SUITE FAILURES PRESENT") << "\n";
    return run.all_pass ? 0 : 1;
}

int cmd_demo(double alpha, double eps, const std::vector<long>& m_list) {
    const DivergenceReport rep = run_divergence_demo(alpha, eps, m_list);
    std::printf("%4s  %-18s  %-18s\n", "m", "tail_functional(0)", "frame_norm_b1");
    for (std::size_t i = 0; i < rep.m_list.size(); ++i) {
        std::printf("%4ld  %-18s  %-18s\n", rep.m_list[i],
                    format_real(rep.libera_at_zero[i]).c_str(),
                    format_real(rep.frame_norms[i]).c_str());
    }
    print_divergence_summary(std::cout, rep);
    return rep.pass ? 0 : 1;
}

int cmd_frame(int order, const std::string& bump_name) {
    const Frame frame(order, BumpFunction::by_name(bump_name));
    std::printf("%3s  %8s  %8s  %-14s  %-14s  %-14s\n", "n", "lo", "hi", "H1", "H2", "Hinf");
    for (int n = 0; n <= frame.n_max(); ++n) {
        const FramePolynomial& block = frame.block(n);
        std::printf("%3d  %8d  %8d  %-14s  %-14s  %-14s\n", n, block.support_lo,
                    block.support_hi, format_real(hardy_norm(block.poly, 1.0)).c_str(),
                    format_real(hardy_norm(block.poly, 2.0)).c_str(),
                    format_real(hardy_norm(block.poly,
                                           std::numeric_limits<double>::infinity())).c_str());
    }
    return 0;
}

int cmd_norm(const std::string& in_path, const std::string& space, double alpha,
             const std::string& weight_name, const std::string& p_text) {
    const CoefficientSeries f = read_series_file(in_path);
    const bool loglog = weight_name == "loglog";
    if (space == "hardy") {
        const double p = parse_p(p_text);
        std::cout << format_real(hardy_norm(f, p)) << "\n";
        return 0;
    }
    NormResult res;
    if (space == "bloch") {
        res = loglog ? bloch_sup_norm(f, WeightSpec::loglog()) : bloch_log_norm(f, alpha);
    } else if (space == "bloch1") {
        res = bloch1_log_norm(f, loglog ? WeightSpec::loglog() : WeightSpec::log_alpha(alpha));
    } else {
        throw CLI::ValidationError("--space must be bloch, bloch1, or hardy");
    }
    std::cout << format_real(res.value) << "\n";
    std::cerr << "radial points " << res.radial_points << ", circle points " << res.circle_points
              << ", error estimate " << format_real(res.est_error) << "\n";
    return 0;
}

int cmd_op(const std::string& apply, const std::string& in_path, const std::string& out_path,
           const std::vector<std::string>& pair_paths) {
    if (!pair_paths.empty()) {
        const CoefficientSeries f = read_series_file(pair_paths[0]);
        const CoefficientSeries g = read_series_file(pair_paths[1]);
        const PairingValue pv = pairing(f, g);
        std::cout << format_real(pv.value.real()) << " " << format_real(pv.value.imag())
                  << " (" << pv.terms << " terms)\n";
        return 0;
    }
    const CoefficientSeries f = read_series_file(in_path);
    CoefficientSeries out = CoefficientSeries::zero(0);
    if (apply == "cesaro") {
        out = cesaro(f);
    } else if (apply == "libera") {
        out = libera_coeff(f);
    } else {
        throw CLI::ValidationError("--apply must be cesaro or libera");
    }
    if (out_path.empty()) {
        write_series_text(out, std::cout);
    } else {
        write_series_file(out, out_path);
        std::cerr << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_criteria(const std::string& in_path, double alpha, const std::string& which) {
    const CoefficientSeries f = read_series_file(in_path);
    if (which == "s") {
        std::vector<double> a;
        a.reserve(f.size());
        for (int n = 0; n <= f.degree(); ++n) a.push_back(f.coeff(n).real());
        std::cout << format_real(s_alpha(a, alpha)) << "\n";
        return 0;
    }
    if (which == "k") {
        std::cout << format_real(k_alpha(f, alpha)) << "\n";
        return 0;
    }
    if (which == "loglog") {
        std::cout << format_real(k_loglog(f)) << "\n";
        return 0;
    }
    int order = 0;
    while (((1L << order) - 1) < f.degree()) ++order;
    const Frame frame(order);
    if (which == "frame-b1") {
        std::cout << format_real(frame_norm_b1(f, alpha, frame)) << "\n";
    } else if (which == "frame-bloch") {
        std::cout << format_real(frame_norm_bloch(f, alpha, frame)) << "\n";
    } else if (which == "profile") {
        const std::vector<double> prof = little_bloch_profile(f, alpha, frame);
        for (std::size_t n = 0; n < prof.size(); ++n) {
            std::cout << n << " " << format_real(prof[n]) << "\n";
        }
    } else {
        throw CLI::ValidationError(
            "--which must be s, k, loglog, frame-b1, frame-bloch, or profile");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"norm checks and verification suites for logarithmic Bloch-type spaces"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "reports", format_name = "json";
    CLI::App* verify = app.add_subcommand("verify", "run every suite and write report files");
    verify->add_option("--config", config_path, "sectioned key=value config file");
    verify->add_option("--out", out_dir, "report output directory");
    verify->add_option("--format", format_name, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    double demo_alpha = -0.5;
    double demo_eps = 0.0;
    std::vector<long> demo_m = {4, 8, 12, 16, 20};
    CLI::App* demo = app.add_subcommand(
        "demo-divergence", "bounded family whose tail-sum functional at 0 diverges");
    demo->add_option("--alpha", demo_alpha, "weight exponent, must be negative")->required();
    demo->add_option("--eps", demo_eps, "family exponent offset; <= 0 means 1 - alpha");
    demo->add_option("--m", demo_m, "radii 1 - 2^-m")->delimiter(',');

    int frame_order = 8;
    std::string bump_name = "default";
    CLI::App* frame_cmd = app.add_subcommand("frame", "print frame block supports and norms");
    frame_cmd->add_option("--n", frame_order, "largest block index")->required();
    frame_cmd->add_option("--omega", bump_name, "bump profile name");

    std::string norm_in, norm_space = "bloch", norm_weight = "log", norm_p = "inf";
    double norm_alpha = 0.0;
    CLI::App* norm_cmd = app.add_subcommand("norm", "norm of a series file");
    norm_cmd->add_option("--in", norm_in, "series file (text or json)")->required();
    norm_cmd->add_option("--space", norm_space, "bloch, bloch1, or hardy")
        ->check(CLI::IsMember({"bloch", "bloch1", "hardy"}));
    norm_cmd->add_option("--alpha", norm_alpha, "log-weight exponent");
    norm_cmd->add_option("--weight", norm_weight, "log or loglog")
        ->check(CLI::IsMember({"log", "loglog"}));
    norm_cmd->add_option("--p", norm_p, "mean exponent for hardy (number or inf)");

    std::string op_apply, op_in, op_out;
    std::vector<std::string> op_pair;
    CLI::App* op_cmd = app.add_subcommand("op", "apply an operator or evaluate the pairing");
    op_cmd->add_option("--apply", op_apply, "cesaro or libera");
    op_cmd->add_option("--in", op_in, "input series file");
    op_cmd->add_option("--out", op_out, "output series file (stdout if omitted)");
    op_cmd->add_option("--pair", op_pair, "two series files to pair")->expected(2);

    std::string crit_in, crit_which = "s";
    double crit_alpha = 0.0;
    CLI::App* crit_cmd = app.add_subcommand("criteria", "coefficient and frame criteria");
    crit_cmd->add_option("--in", crit_in, "input series file")->required();
    crit_cmd->add_option("--alpha", crit_alpha, "weight exponent");
    crit_cmd->add_option("--which", crit_which,
                         "s, k, loglog, frame-b1, frame-bloch, or profile");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(config_path, out_dir, format_name);
        if (demo->parsed()) return cmd_demo(demo_alpha, demo_eps, demo_m);
        if (frame_cmd->parsed()) return cmd_frame(frame_order, bump_name);
        if (norm_cmd->parsed()) {
            return cmd_norm(norm_in, norm_space, norm_alpha, norm_weight, norm_p);
        }
        if (op_cmd->parsed()) {
            if (op_pair.empty() && (op_apply.empty() || op_in.empty())) {
                std::cerr << "op needs either --pair f g or --apply with --in\n";
                return 2;
            }
            return cmd_op(op_apply, op_in, op_out, op_pair);
        }
        if (crit_cmd->parsed()) return cmd_criteria(crit_in, crit_alpha, crit_which);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
