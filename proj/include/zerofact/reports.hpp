#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zerofact/bounds.hpp"
#include "zerofact/squeeze.hpp"
#include "zerofact/survey.hpp"

namespace zerofact {

/// Process exit codes shared by every subcommand.
enum class ExitStatus : int { success = 0, verification_failure = 1, usage_error = 2 };

struct VerifyOptions {
    std::vector<JustificationId> justifications{kAllJustifications.begin(), kAllJustifications.end()};
    GridSpec grid;
    double slack_tolerance = kDefaultSlackTolerance;
    std::uint64_t seed = 42;
    std::uint64_t mc_samples = 1'000'000;
};

struct CheckLine {
    std::string name;
    bool passed = false;
    std::string detail;  // offending n / t and slack on failure, summary otherwise
};

struct VerifyReport {
    std::vector<CertificationReport> certificates;
    std::vector<CheckLine> checks;

    bool passed() const;
};

/// Runs the sandwich certificates for the selected justifications plus the
/// checks that belong to them:
///   J1: integer chain n = 1..20, n < 2^n for n = 1..170
///   J2: integer chain and GM <= AM for n = 1..20
///   J3: integer moment anchors n = 1..20, three-route moment agreement at
///       t = 0.1..0.9, Jensen and e^{-theta} >= 1 - theta on grids, and the
///       moment sandwich with its power-integral identity
VerifyReport run_verify(const VerifyOptions& options);
std::string render_verify(const VerifyReport& report);

/// Named functions accepted by the `limit` subcommand:
/// gamma, j1-lower, j1-upper, j2-lower, j2-upper, j3-lower, j3-upper.
std::vector<std::string_view> limit_targets();
/// Throws UsageError for an unknown name.
double (*limit_target(std::string_view name))(double);
std::string render_limit(std::string_view target, const LimitEstimate& estimate);

std::string render_survey(const std::vector<StatementTable>& tables, const SurveyComparison& comparison);
/// `synthetic` marks results computed on a generated pairing.
std::string render_ttest(const TTestResult& result, bool synthetic);

}  // namespace zerofact
