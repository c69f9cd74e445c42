// Command-line front end: gamma, verify, limit, moments, survey, plot.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "zerofact/errors.hpp"
#include "zerofact/figures.hpp"
#include "zerofact/gamma.hpp"
#include "zerofact/moments.hpp"
#include "zerofact/reports.hpp"
#include "zerofact/squeeze.hpp"
#include "zerofact/survey.hpp"

namespace {

using namespace zerofact;

int code(ExitStatus status) { return static_cast<int>(status); }

struct GlobalOptions {
    std::uint64_t seed = 42;
    double tolerance = kDefaultSlackTolerance;
    std::string out;
};

void write_output(const GlobalOptions& global, const std::string& text) {
    if (global.out.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream file(global.out, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + global.out + " for writing");
    file << text;
    file.flush();
    if (!file) throw IoError("failed writing " + global.out);
}

int run_gamma(const GlobalOptions& global, const std::vector<double>& ts) {
    std::string out = fmt::format("{:>8}  {:>20}  {:>20}  {:>10}  {:>10}\n", "t", "series", "quadrature",
                                  "quad err", "|diff|");
    for (double t : ts) {
        const GammaResult s = gamma_plus_one_series(t);
        const GammaResult q = gamma_plus_one_quadrature(t);
        out += fmt::format("{:>8.4f}  {:>20.15f}  {:>20.15f}  {:>10.2e}  {:>10.2e}\n", t, s.value, q.value,
                           q.error_estimate, std::abs(s.value - q.value));
    }
    write_output(global, out);
    return code(ExitStatus::success);
}

int run_verify_command(const GlobalOptions& global, const std::vector<std::string>& filter, int grid_points,
                       const std::string& spacing) {
    VerifyOptions options;
    options.grid.points = grid_points;
    if (spacing == "geometric") {
        options.grid.spacing = GridSpacing::geometric;
    } else if (spacing != "uniform") {
        throw UsageError("spacing must be 'uniform' or 'geometric'");
    }
    options.slack_tolerance = global.tolerance;
    options.seed = global.seed;
    if (!filter.empty()) {
        options.justifications.clear();
        for (const std::string& f : filter) options.justifications.push_back(parse_justification(f));
    }
    const VerifyReport report = run_verify(options);
    write_output(global, render_verify(report));
    return code(report.passed() ? ExitStatus::success : ExitStatus::verification_failure);
}

int run_limit_command(const GlobalOptions& global, const std::string& target, int k_max) {
    const auto fn = limit_target(target);
    if (k_max < kMinLimitSamples || k_max > kMaxLimitSamples) throw UsageError("--kmax must lie in [10, 50]");
    const LimitEstimate estimate = limit_at_zero(fn, k_max);
    write_output(global, render_limit(target, estimate));
    return code(estimate.converged ? ExitStatus::success : ExitStatus::verification_failure);
}

int run_moments_command(const GlobalOptions& global, const std::vector<double>& ts, std::uint64_t samples) {
    const McSpec mc{samples, global.seed};
    mc.validate();
    std::string out = fmt::format("{:>6}  {:>18}  {:>18}  {:>18}  {:>10}  {:>8}\n", "t", "quadrature",
                                  "survival form", "monte carlo", "MC SE", "1/(1+t)");
    bool ok = true;
    for (double t : ts) {
        const MomentResult q = moment_quadrature(t);
        const std::string survival = t > 0.0 ? fmt::format("{:>18.12f}", moment_survival_form(t).value)
                                             : fmt::format("{:>18}", "n/a");
        const MomentResult m = moment_monte_carlo(t, mc);
        if (m.uncertainty > 0.0 && std::abs(m.value - q.value) > 4.0 * m.uncertainty) ok = false;
        out += fmt::format("{:>6.3f}  {:>18.12f}  {}  {:>18.12f}  {:>10.2e}  {:>8.5f}\n", t, q.value, survival,
                           m.value, m.uncertainty, 1.0 / (1.0 + t));
    }
    out += fmt::format("seed {}, {} samples per t\n", global.seed, samples);
    write_output(global, out);
    return code(ok ? ExitStatus::success : ExitStatus::verification_failure);
}

int run_survey_command(const GlobalOptions& global, const std::string& csv, const std::string& pairs,
                       bool synthetic_ttest, bool two_sided) {
    const std::vector<StatementTable> tables = csv.empty() ? embedded_tables() : read_tables_csv(csv);
    const SurveyComparison comparison = compare_to_paper(tables);
    std::string out = render_survey(tables, comparison);
    bool ok = comparison.unexpected_flags().empty() && comparison.missing_known_flags().empty();

    const Alternative alternative = two_sided ? Alternative::two_sided : Alternative::less;
    if (!pairs.empty()) {
        out += render_ttest(paired_t_test(read_pairs_csv(pairs), alternative), false);
    }
    if (synthetic_ttest) {
        const auto& embedded = embedded_tables();
        const auto find = [&](std::string_view id) {
            return *std::find_if(embedded.begin(), embedded.end(),
                                 [&](const StatementTable& t) { return t.statement_id == id; });
        };
        const PairedResponses synthetic = synthetic_pairing(find("0"), find("4"), global.seed);
        if (!marginal_consistency(synthetic, find("0"), find("4"))) ok = false;
        out += fmt::format("synthetic pairing seed {}\n", global.seed);
        out += render_ttest(paired_t_test(synthetic, alternative), true);
    }
    write_output(global, out);
    return code(ok ? ExitStatus::success : ExitStatus::verification_failure);
}

int run_plot_command(const GlobalOptions& global, int figure, const std::string& format, int resolution) {
    FigureSpec spec{figure, resolution, OutputFormat::csv};
    if (format == "svg") {
        spec.format = OutputFormat::svg;
    } else if (format != "csv") {
        throw UsageError("format must be 'csv' or 'svg'");
    }
    spec.validate();
    if (global.out.empty()) {
        std::cout << render_figure(spec);
    } else {
        emit_figure(spec, global.out);
    }
    return code(ExitStatus::success);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical certification of the squeeze arguments for 0! = 1 and of the survey analysis"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--seed", global.seed, "Seed for Monte Carlo and synthetic pairings")->capture_default_str();
    app.add_option("--tolerance", global.tolerance, "Slack tolerance for sandwich violations")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--out", global.out, "Write output to this file instead of stdout");

    std::vector<double> gamma_ts{0.0, 0.5, 1.0};
    auto* gamma_cmd = app.add_subcommand("gamma", "Evaluate Gamma(t+1) with both evaluators");
    gamma_cmd->add_option("t", gamma_ts, "Points in [0, 1]")->check(CLI::Range(0.0, 1.0));

    bool verify_all = false;
    std::vector<std::string> verify_filter;
    int grid_points = 10001;
    std::string spacing = "uniform";
    auto* verify_cmd = app.add_subcommand("verify", "Certify the three sandwiches and their supporting checks");
    verify_cmd->add_flag("--all", verify_all, "All three justifications (default)");
    verify_cmd->add_option("--justification,-j", verify_filter, "1, 2 or 3; repeatable");
    verify_cmd->add_option("--grid", grid_points, "Grid points strictly inside (0, 1)")->capture_default_str();
    verify_cmd->add_option("--spacing", spacing, "uniform or geometric")->capture_default_str();

    std::string limit_name;
    int k_max = kDefaultLimitSamples;
    auto* limit_cmd = app.add_subcommand("limit", "Estimate a right limit at t = 0 from t_k = 2^-k");
    limit_cmd->add_option("--target", limit_name, "gamma, j1-lower, j1-upper, j2-lower, j2-upper, j3-lower, j3-upper")
        ->required();
    limit_cmd->add_option("--kmax", k_max, "Number of dyadic samples, 10..50")->capture_default_str();

    std::vector<double> moment_ts{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::uint64_t samples = 1'000'000;
    auto* moments_cmd = app.add_subcommand("moments", "E[X^t] by quadrature, survival form and Monte Carlo");
    moments_cmd->add_option("--t", moment_ts, "Points in [0, 1]")->check(CLI::Range(0.0, 1.0));
    moments_cmd->add_option("--samples", samples, "Monte Carlo sample count (>= 1000)")->capture_default_str();

    std::string survey_csv;
    std::string pairs_csv;
    bool synthetic_ttest = false;
    bool two_sided = false;
    auto* survey_cmd = app.add_subcommand("survey", "Recompute the survey tables and compare with the printed figures");
    survey_cmd->add_option("--csv", survey_csv, "Table counts: statement_id,category,count");
    survey_cmd->add_option("--pairs", pairs_csv, "Paired responses: respondent_id,before,after");
    survey_cmd->add_flag("--synthetic-ttest", synthetic_ttest, "Run the t-test on a synthetic marginal-consistent pairing");
    survey_cmd->add_flag("--two-sided", two_sided, "Two-sided alternative instead of before - after < 0");

    int figure = 1;
    std::string format = "csv";
    int resolution = 512;
    auto* plot_cmd = app.add_subcommand("plot", "Emit figure data (1-3 curves, 4-7 survey bars)");
    plot_cmd->add_option("--figure", figure, "1..7")->required();
    plot_cmd->add_option("--format", format, "csv or svg")->capture_default_str();
    plot_cmd->add_option("--resolution", resolution, "Curve points")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return code(ExitStatus::usage_error);
    }

    try {
        if (*gamma_cmd) return run_gamma(global, gamma_ts);
        if (*verify_cmd) return run_verify_command(global, verify_all ? std::vector<std::string>{} : verify_filter,
                                                   grid_points, spacing);
        if (*limit_cmd) return run_limit_command(global, limit_name, k_max);
        if (*moments_cmd) return run_moments_command(global, moment_ts, samples);
        if (*survey_cmd) return run_survey_command(global, survey_csv, pairs_csv, synthetic_ttest, two_sided);
        if (*plot_cmd) return run_plot_command(global, figure, format, resolution);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return code(ExitStatus::usage_error);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return code(ExitStatus::usage_error);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return code(ExitStatus::usage_error);
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return code(ExitStatus::usage_error);
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return code(ExitStatus::verification_failure);
    }
    return code(ExitStatus::usage_error);
}
