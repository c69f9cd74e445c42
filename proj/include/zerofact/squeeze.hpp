#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "zerofact/bounds.hpp"

namespace zerofact {

enum class GridSpacing { uniform, geometric };

/// Certification grid strictly inside (0, 1).
///   uniform:   t_i = i / (points + 1), i = 1..points
///   geometric: t_i log-spaced from 2^-30 to points / (points + 1)
struct GridSpec {
    int points = 10001;
    GridSpacing spacing = GridSpacing::uniform;

    /// Throws UsageError when points < 3.
    void validate() const;
    std::vector<double> nodes() const;
};

struct SlackExtreme {
    double value = 0.0;
    double t = 0.0;
};

struct Violation {
    double t;
    double lower_slack;
    double upper_slack;
};

/// Sandwich certificate for one justification on one grid.
///   lower_slack(t) = Gamma(t+1) - a(t),  upper_slack(t) = b(t) - Gamma(t+1)
/// Extremes are the grid extremes, sharpened by golden-section search when
/// they fall at an interior grid node. Ties resolve to the smallest t.
struct CertificationReport {
    JustificationId id = JustificationId::J1;
    GridSpec grid;
    double slack_tolerance = 1e-12;
    std::vector<Violation> violations;
    SlackExtreme min_lower_slack;
    SlackExtreme min_upper_slack;
    SlackExtreme max_lower_slack;
    SlackExtreme max_upper_slack;
    bool refined = false;

    bool passed() const { return violations.empty(); }
};

inline constexpr double kDefaultSlackTolerance = 1e-12;
inline constexpr double kRefineBracket = 1e-6;

CertificationReport certify(JustificationId id,
                            const GridSpec& grid = {},
                            double slack_tolerance = kDefaultSlackTolerance);

struct LimitEstimate {
    std::vector<std::pair<double, double>> sample_points;  // (t_k, f(t_k)), t_k = 2^-k
    std::vector<double> extrapolants;                       // Richardson diagonal, one per sample
    double estimated_limit = 0.0;
    double estimated_slope = 0.0;
    double tolerance = 1e-9;
    bool converged = false;
};

inline constexpr int kMinLimitSamples = 10;
inline constexpr int kMaxLimitSamples = 50;
inline constexpr int kDefaultLimitSamples = 40;

/// Right-sided limit of f at 0 from the dyadic sequence t_k = 2^-k,
/// k = 1..k_max. The limit is the last diagonal entry of a Richardson table
/// over ratios 2, 2, 4, 4, 4, 8, 8, 8 (at most k_max / 2 of them), which also
/// absorbs t ln t terms; the slope is the Richardson-extrapolated divided
/// difference at the most stable level. converged iff the last two limit
/// extrapolants differ by less than 1e-9.
/// Throws DomainError for k_max outside [10, 50] and SampleEvaluationError
/// when f throws.
LimitEstimate limit_at_zero(const std::function<double(double)>& f, int k_max = kDefaultLimitSamples);

/// Gamma(t + 1) by the series evaluator, as a plain function of t.
double gamma_plus_one(double t);

/// The squeeze argument for one justification: certifies the sandwich on a
/// uniform grid, takes both bound limits and checks they agree with each
/// other and with 1 to 1e-9. Returns the common limit.
/// Throws InconsistencyError if any step fails.
double squeeze_conclusion(JustificationId id, const GridSpec& grid = {1001, GridSpacing::uniform});

}  // namespace zerofact
