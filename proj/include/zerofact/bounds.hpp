#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace zerofact {

enum class JustificationId { J1, J2, J3 };

inline constexpr std::array<JustificationId, 3> kAllJustifications = {
    JustificationId::J1, JustificationId::J2, JustificationId::J3};

std::string_view to_string(JustificationId id);

/// Parses "1"/"2"/"3" or "J1"/"J2"/"J3"; throws UsageError otherwise.
JustificationId parse_justification(std::string_view text);

// Continuous bounds around Gamma(t + 1).

/// (t/2)^{t/2} on (0, 1]. t = 0 is excluded (its limiting value 1 is
/// established by sequence evaluation, not here).
double j1_lower(double t);
/// 2^{t^2} on [0, 1].
double j1_upper(double t);
/// ((t + 1)/2)^t on [0, 1].
double j2_lower(double t);
/// Constant 1 on [0, 1].
double j2_upper(double t);
/// 1/(1 + t) on [0, 1].
double j3_lower(double t);
/// Constant 1 on [0, 1].
double j3_upper(double t);

using BoundFunction = double (*)(double);

struct BoundPair {
    JustificationId id;
    BoundFunction lower;
    BoundFunction upper;
    std::string_view lower_formula;
    std::string_view upper_formula;
    /// For J2 the integer-domain chain 1 <= n! <= ((n+1)/2)^n has its
    /// bounds on the opposite sides from the continuous sandwich.
    bool swapped_for_integers;
};

BoundPair bound_pair(JustificationId id);

// Integer-domain ancestors, all evaluated in log space.

struct ChainLink {
    std::string relation;  // e.g. "(n/2)^(n/2) <= n!"
    double lhs_log;
    double rhs_log;
    double slack_log;      // rhs_log - lhs_log, or a relative-error margin for equality links
    bool holds;
};

struct ChainReport {
    int n;
    JustificationId id;
    std::vector<ChainLink> links;
    bool holds;
};

/// Checks the integer chain behind justification `id` at 1 <= n <= 170:
///   J1: (n/2)^{n/2} <= n! <= n^n <= 2^{n^2}
///   J2: 1 <= n! <= ((n + 1)/2)^n
///   J3: n! equals the exponential moment integral within 1e-8 relative
/// Throws DomainError outside that range.
ChainReport integer_chain_check(int n, JustificationId id);

struct SlackCheck {
    bool holds;
    double slack;
};

/// GM <= AM on {1, ..., n}: slack = ln((n + 1)/2) - ln(n!)/n.
SlackCheck gm_am_check(int n);

/// n < 2^n in log space: slack = n ln 2 - ln n.
SlackCheck power_of_two_check(int n);

}  // namespace zerofact
