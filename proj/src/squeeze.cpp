#include "zerofact/squeeze.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "zerofact/errors.hpp"
#include "zerofact/gamma.hpp"

namespace zerofact {

namespace {

constexpr double kGeometricStart = 0x1p-30;
// Each ratio is applied once per expected power of k: terms t^j (ln t)^m
// become k^m 2^{-jk} on the dyadic sequence, and the repeated ratio-2^j
// step removes them (j1_lower carries t ln t and t^2 ln^2 t).
constexpr std::array<double, 8> kLimitRatios = {2.0, 2.0, 4.0, 4.0, 4.0, 8.0, 8.0, 8.0};
constexpr int kSlopeRichardsonOrder = 3;
// Beyond this level the divided differences are dominated by cancellation.
constexpr int kSlopeMaxLevel = 26;

/// Golden-section minimization of g on [lo, hi] until the bracket is below `width`.
SlackExtreme golden_minimize(const std::function<double(double)>& g, double lo, double hi, double width) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = g(x1);
    double f2 = g(x2);
    while (hi - lo > width) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = g(x2);
        }
    }
    return f1 <= f2 ? SlackExtreme{f1, x1} : SlackExtreme{f2, x2};
}

/// Grid extreme of `values` (smallest t wins ties), refined when interior.
SlackExtreme locate_extreme(const std::vector<double>& nodes,
                            const std::vector<double>& values,
                            const std::function<double(double)>& slack,
                            bool maximize,
                            bool& refined) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (maximize ? values[i] > values[best] : values[i] < values[best]) best = i;
    }
    SlackExtreme extreme{values[best], nodes[best]};
    if (best == 0 || best + 1 == values.size()) return extreme;

    const double sign = maximize ? -1.0 : 1.0;
    const auto objective = [&](double t) { return sign * slack(t); };
    SlackExtreme local = golden_minimize(objective, nodes[best - 1], nodes[best + 1], kRefineBracket);
    local.value *= sign;
    refined = true;
    if (maximize ? local.value > extreme.value : local.value < extreme.value) return local;
    return extreme;
}

}  // namespace

void GridSpec::validate() const {
    if (points < 3) throw UsageError("grid needs at least 3 points, got " + std::to_string(points));
}

std::vector<double> GridSpec::nodes() const {
    validate();
    std::vector<double> t(static_cast<std::size_t>(points));
    const double denom = static_cast<double>(points) + 1.0;
    if (spacing == GridSpacing::uniform) {
        for (int i = 0; i < points; ++i) t[i] = static_cast<double>(i + 1) / denom;
    } else {
        const double last = static_cast<double>(points) / denom;
        const double log_span = std::log(last / kGeometricStart);
        for (int i = 0; i < points; ++i) {
            t[i] = kGeometricStart * std::exp(log_span * static_cast<double>(i) / static_cast<double>(points - 1));
        }
        t.back() = last;
    }
    return t;
}

double gamma_plus_one(double t) { return gamma_plus_one_series(t).value; }

CertificationReport certify(JustificationId id, const GridSpec& grid, double slack_tolerance) {
    const std::vector<double> nodes = grid.nodes();
    const BoundPair pair = bound_pair(id);

    const auto lower_slack = [&pair](double t) { return gamma_plus_one(t) - pair.lower(t); };
    const auto upper_slack = [&pair](double t) { return pair.upper(t) - gamma_plus_one(t); };

    std::vector<double> lower(nodes.size());
    std::vector<double> upper(nodes.size());
    CertificationReport report;
    report.id = id;
    report.grid = grid;
    report.slack_tolerance = slack_tolerance;

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double t = nodes[i];
        const double gamma = gamma_plus_one(t);
        lower[i] = gamma - pair.lower(t);
        upper[i] = pair.upper(t) - gamma;
        if (lower[i] < -slack_tolerance || upper[i] < -slack_tolerance) {
            report.violations.push_back({t, lower[i], upper[i]});
        }
    }

    report.min_lower_slack = locate_extreme(nodes, lower, lower_slack, false, report.refined);
    report.min_upper_slack = locate_extreme(nodes, upper, upper_slack, false, report.refined);
    report.max_lower_slack = locate_extreme(nodes, lower, lower_slack, true, report.refined);
    report.max_upper_slack = locate_extreme(nodes, upper, upper_slack, true, report.refined);

    // A refined minimum below tolerance is a violation the grid missed.
    for (const SlackExtreme* m : {&report.min_lower_slack, &report.min_upper_slack}) {
        const bool on_grid = std::find(nodes.begin(), nodes.end(), m->t) != nodes.end();
        if (!on_grid && m->value < -slack_tolerance) {
            report.violations.push_back({m->t, lower_slack(m->t), upper_slack(m->t)});
        }
    }
    return report;
}

LimitEstimate limit_at_zero(const std::function<double(double)>& f, int k_max) {
    if (k_max < kMinLimitSamples || k_max > kMaxLimitSamples) {
        throw DomainError("limit_at_zero: k_max must lie in [10, 50], got " + std::to_string(k_max));
    }

    LimitEstimate est;
    std::vector<double> values;
    for (int k = 1; k <= k_max; ++k) {
        const double t = std::ldexp(1.0, -k);
        double v = 0.0;
        try {
            v = f(t);
        } catch (const std::exception& e) {
            throw SampleEvaluationError("limit_at_zero: f failed at t = 2^-" + std::to_string(k) + ": " + e.what(), k);
        }
        est.sample_points.emplace_back(t, v);
        values.push_back(v);
    }

    // Richardson table for f(t) = L + c1 t + c2 t^2 + ... with t halving.
    std::vector<double> prev_row;
    for (std::size_t k = 0; k < values.size(); ++k) {
        std::vector<double> row{values[k]};
        const std::size_t order = std::min({k, kLimitRatios.size(), values.size() / 2});
        for (std::size_t j = 1; j <= order; ++j) {
            const double factor = kLimitRatios[j - 1] - 1.0;
            row.push_back(row[j - 1] + (row[j - 1] - prev_row[j - 1]) / factor);
        }
        est.extrapolants.push_back(row.back());
        prev_row = std::move(row);
    }
    est.estimated_limit = est.extrapolants.back();
    const double last_step = std::abs(est.extrapolants.back() - est.extrapolants[est.extrapolants.size() - 2]);
    est.converged = last_step < est.tolerance;

    // Divided differences D_k = (f(t_k) - f(t_{k+1})) / (t_k - t_{k+1}) expand
    // in powers of t_k, so the same ratio-2 table applies.
    const int levels = std::min(k_max - 1, kSlopeMaxLevel);
    std::vector<double> slope_diag;
    prev_row.clear();
    for (int k = 0; k < levels; ++k) {
        const double dd = (values[k] - values[k + 1]) / (est.sample_points[k].first - est.sample_points[k + 1].first);
        std::vector<double> row{dd};
        const int order = std::min(k, kSlopeRichardsonOrder);
        for (int j = 1; j <= order; ++j) {
            const double factor = std::ldexp(1.0, j) - 1.0;
            row.push_back(row[j - 1] + (row[j - 1] - prev_row[j - 1]) / factor);
        }
        slope_diag.push_back(row.back());
        prev_row = std::move(row);
    }
    double best_step = std::numeric_limits<double>::infinity();
    est.estimated_slope = slope_diag.back();
    for (std::size_t k = 1; k < slope_diag.size(); ++k) {
        const double step = std::abs(slope_diag[k] - slope_diag[k - 1]);
        if (step < best_step) {
            best_step = step;
            est.estimated_slope = slope_diag[k];
        }
    }
    return est;
}

double squeeze_conclusion(JustificationId id, const GridSpec& grid) {
    const CertificationReport report = certify(id, grid);
    if (!report.passed()) {
        throw InconsistencyError("squeeze_conclusion: sandwich violated for " + std::string(to_string(id)));
    }
    const BoundPair pair = bound_pair(id);
    const LimitEstimate lower = limit_at_zero(pair.lower);
    const LimitEstimate upper = limit_at_zero(pair.upper);
    if (!lower.converged || !upper.converged) {
        throw InconsistencyError("squeeze_conclusion: bound limit did not converge for " + std::string(to_string(id)));
    }
    constexpr double kAgreement = 1e-9;
    if (std::abs(lower.estimated_limit - upper.estimated_limit) > kAgreement) {
        throw InconsistencyError("squeeze_conclusion: bound limits disagree for " + std::string(to_string(id)));
    }
    const double common = 0.5 * (lower.estimated_limit + upper.estimated_limit);
    if (std::abs(common - 1.0) > kAgreement) {
        throw InconsistencyError("squeeze_conclusion: common limit differs from 1 for " + std::string(to_string(id)));
    }
    return common;
}

}  // namespace zerofact
