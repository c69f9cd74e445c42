#include "zerofact/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zerofact/errors.hpp"
#include "zerofact/gamma.hpp"

namespace zerofact {

namespace {

constexpr int kMaxChainOrder = 170;
constexpr double kMomentAnchorRelTol = 1e-8;

void require_closed_unit(double t, const char* who) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError(std::string(who) + ": t must lie in [0, 1]");
}

void require_chain_order(int n, const char* who) {
    if (n < 1 || n > kMaxChainOrder) {
        throw DomainError(std::string(who) + ": n must lie in [1, 170], got " + std::to_string(n));
    }
}

// Log-domain comparisons carry a few ulps of noise; equality links (n = 1)
// must not fail on it.
ChainLink make_link(std::string relation, double lhs_log, double rhs_log) {
    const double slack = rhs_log - lhs_log;
    const double noise = 1e-12 * std::max({1.0, std::abs(lhs_log), std::abs(rhs_log)});
    return {std::move(relation), lhs_log, rhs_log, slack, slack >= -noise};
}

}  // namespace

std::string_view to_string(JustificationId id) {
    switch (id) {
        case JustificationId::J1: return "J1";
        case JustificationId::J2: return "J2";
        case JustificationId::J3: return "J3";
    }
    return "J?";
}

JustificationId parse_justification(std::string_view text) {
    if (text == "1" || text == "J1" || text == "j1") return JustificationId::J1;
    if (text == "2" || text == "J2" || text == "j2") return JustificationId::J2;
    if (text == "3" || text == "J3" || text == "j3") return JustificationId::J3;
    throw UsageError("unknown justification '" + std::string(text) + "' (expected 1, 2 or 3)");
}

double j1_lower(double t) {
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("j1_lower: t must lie in (0, 1]");
    const double half = 0.5 * t;
    return std::exp(half * std::log(half));
}

double j1_upper(double t) {
    require_closed_unit(t, "j1_upper");
    return std::exp(t * t * std::numbers::ln2);
}

double j2_lower(double t) {
    require_closed_unit(t, "j2_lower");
    return std::exp(t * std::log(0.5 * (t + 1.0)));
}

double j2_upper(double t) {
    require_closed_unit(t, "j2_upper");
    return 1.0;
}

double j3_lower(double t) {
    require_closed_unit(t, "j3_lower");
    return 1.0 / (1.0 + t);
}

double j3_upper(double t) {
    require_closed_unit(t, "j3_upper");
    return 1.0;
}

BoundPair bound_pair(JustificationId id) {
    switch (id) {
        case JustificationId::J1: return {id, &j1_lower, &j1_upper, "(t/2)^(t/2)", "2^(t^2)", false};
        case JustificationId::J2: return {id, &j2_lower, &j2_upper, "((t+1)/2)^t", "1", true};
        case JustificationId::J3: return {id, &j3_lower, &j3_upper, "1/(1+t)", "1", false};
    }
    throw DomainError("bound_pair: unknown justification");
}

ChainReport integer_chain_check(int n, JustificationId id) {
    require_chain_order(n, "integer_chain_check");
    const double nd = static_cast<double>(n);
    const double log_fact = log_factorial(n);

    ChainReport report{n, id, {}, true};
    switch (id) {
        case JustificationId::J1:
            report.links.push_back(make_link("(n/2)^(n/2) <= n!", 0.5 * nd * std::log(0.5 * nd), log_fact));
            report.links.push_back(make_link("n! <= n^n", log_fact, nd * std::log(nd)));
            report.links.push_back(make_link("n^n <= 2^(n^2)", nd * std::log(nd), nd * nd * std::numbers::ln2));
            break;
        case JustificationId::J2:
            report.links.push_back(make_link("1 <= n!", 0.0, log_fact));
            report.links.push_back(make_link("n! <= ((n+1)/2)^n", log_fact, nd * std::log(0.5 * (nd + 1.0))));
            break;
        case JustificationId::J3: {
            const GammaResult moment = power_exponential_integral(nd);
            const double moment_log = std::log(moment.value);
            const double rel_err = std::abs(std::expm1(moment_log - log_fact));
            report.links.push_back(
                {"n! = E[X^n]", log_fact, moment_log, kMomentAnchorRelTol - rel_err, rel_err <= kMomentAnchorRelTol});
            break;
        }
    }
    for (const ChainLink& link : report.links) report.holds = report.holds && link.holds;
    return report;
}

SlackCheck gm_am_check(int n) {
    if (n < 1) throw DomainError("gm_am_check: n must be at least 1");
    const double nd = static_cast<double>(n);
    const double slack = std::log(0.5 * (nd + 1.0)) - log_factorial(n) / nd;
    return {slack >= -1e-15, slack};
}

SlackCheck power_of_two_check(int n) {
    require_chain_order(n, "power_of_two_check");
    const double nd = static_cast<double>(n);
    const double slack = nd * std::numbers::ln2 - std::log(nd);
    return {slack > 0.0, slack};
}

}  // namespace zerofact
