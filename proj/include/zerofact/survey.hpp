#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zerofact {

enum class LikertCategory { strongly_agree, somewhat_agree, neutral, somewhat_disagree, strongly_disagree };

inline constexpr std::array<LikertCategory, 5> kLikertCategories = {
    LikertCategory::strongly_agree, LikertCategory::somewhat_agree, LikertCategory::neutral,
    LikertCategory::somewhat_disagree, LikertCategory::strongly_disagree};

/// 5, 4, 3, 2, 1 from strongly agree down to strongly disagree.
int likert_code(LikertCategory category);
LikertCategory likert_from_code(int code);
/// CSV token, e.g. "strongly_agree".
std::string_view likert_token(LikertCategory category);
/// Table row label, e.g. "Strongly agree".
std::string_view likert_label(LikertCategory category);
std::optional<LikertCategory> parse_likert_token(std::string_view token);

/// Statement identifiers used in the survey: "0", "1a".."3c", "4".
bool is_known_statement(std::string_view id);

/// Response counts for one statement, ordered as kLikertCategories.
struct StatementTable {
    std::string statement_id;
    std::array<int, 5> counts{};

    int total() const;
    int count(LikertCategory category) const { return counts[static_cast<std::size_t>(category)]; }
};

/// A percentage rounded half-up at a fixed number of decimals, kept as an
/// exact integer count of units (hundredths for 2 decimals) next to the
/// unrounded value.
struct RoundedPercent {
    std::int64_t units = 0;
    int decimals = 2;
    double unrounded = 0.0;

    double value() const;
};

/// 100 * part / whole rounded half-up in exact integer arithmetic.
RoundedPercent rounded_percent(std::int64_t part, std::int64_t whole, int decimals = 2);

/// Throws DomainError when the table total is zero.
std::array<RoundedPercent, 5> percentages(const StatementTable& table);

struct AggregateAgree {
    int count = 0;
    int total = 0;
    RoundedPercent percent;
};

/// strongly agree + somewhat agree, and its share of the total.
AggregateAgree aggregate_agree(const StatementTable& table);

/// Throws DomainError unless 0 <= responded <= invited and invited > 0.
RoundedPercent response_rate(int responded, int invited);

struct PairedResponses {
    std::vector<std::pair<int, int>> pairs;  // (before code, after code)

    /// Throws DomainError when a code is outside 1..5.
    void validate() const;
};

enum class Alternative { less, two_sided };

struct TTestResult {
    int n = 0;
    double mean_diff = 0.0;  // mean of before - after
    double sd_diff = 0.0;    // sample sd (n - 1 divisor)
    double t_stat = 0.0;
    int df = 0;
    double p_one_sided = 0.0;  // P(T_{df} <= t_stat), alternative "before - after < 0"
    double p_two_sided = 0.0;
    Alternative alternative = Alternative::less;

    double p_value() const { return alternative == Alternative::less ? p_one_sided : p_two_sided; }
};

/// Matched-pairs t-test on d_i = before_i - after_i.
/// Throws InsufficientDataError for n < 2 and DegenerateVarianceError when
/// every difference is equal.
TTestResult paired_t_test(const PairedResponses& data, Alternative alternative = Alternative::less);

/// Counts for the n respondents who answered both statements.
///
/// When the table holds more responses than n, the surplus respondents are
/// taken to be those who skipped the later statement, removed one each from
/// the most populous categories in descending count order (ties go to the
/// higher code), cycling if the surplus exceeds five. For the Statement 0
/// table (30, 25, 4, 2, 3) with n = 62 this gives (29, 24, 4, 2, 3).
/// Throws DomainError if the table holds fewer than n responses.
std::array<int, 5> restrict_to_dual_responders(const StatementTable& table, int n);

/// True iff the before/after marginals of `data` equal the table counts,
/// the before table restricted to the dual responders.
bool marginal_consistency(const PairedResponses& data,
                          const StatementTable& before_table,
                          const StatementTable& after_table);

/// SYNTHETIC pairing consistent with both marginals. The raw per-respondent
/// pairs were never published; this only exercises the test machinery.
/// Before codes are listed in category order; after codes are listed the
/// same way and then Fisher-Yates shuffled with std::mt19937_64(seed),
/// swap index = draw % (i + 1) for i = n-1 down to 1.
PairedResponses synthetic_pairing(const StatementTable& before_table,
                                  const StatementTable& after_table,
                                  std::uint64_t seed);

// ---------------------------------------------------------------------------
// Published survey data and printed figures

/// Tables 1-4 as published, one StatementTable per statement, in the order
/// 1a 2a 3a 1b 2b 3b 1c 2c 3c 0 4.
const std::vector<StatementTable>& embedded_tables();

/// Number of students invited to the survey.
inline constexpr int kInvitedStudents = 64;

/// Which of Tables 1-4 a statement belongs to (0 for unknown ids).
int table_number(std::string_view statement_id);

struct Comparison {
    std::string key;    // stable identifier, e.g. "table1:1a:strongly_agree"
    std::string label;  // human-readable description
    double computed = 0.0;
    double printed = 0.0;
    int decimals = 2;
    bool flagged = false;  // computed and printed differ at the printed precision
};

struct SurveyComparison {
    std::vector<Comparison> items;

    std::vector<const Comparison*> flagged() const;
    /// Flags outside the documented list of known printing discrepancies.
    std::vector<const Comparison*> unexpected_flags() const;
    /// Known discrepancies that did not show up.
    std::vector<std::string> missing_known_flags() const;
};

/// Keys of the three known discrepancies in the published prose.
const std::vector<std::string>& known_discrepancy_keys();

/// Recomputes every printed percentage and aggregate claim that can be
/// derived from `tables` and compares it with the published figure.
SurveyComparison compare_to_paper(const std::vector<StatementTable>& tables);
SurveyComparison compare_to_paper();

// ---------------------------------------------------------------------------
// CSV ingestion. UTF-8, comma separated, LF or CRLF, no quoting.

/// Header `statement_id,category,count`. Categories absent for a statement
/// count as zero. Tables come back in first-appearance order.
/// Throws ParseError carrying the 1-based line number.
std::vector<StatementTable> read_tables_csv(const std::filesystem::path& path);
std::vector<StatementTable> parse_tables_csv(std::string_view text);

/// Header `respondent_id,before,after`.
PairedResponses read_pairs_csv(const std::filesystem::path& path);
PairedResponses parse_pairs_csv(std::string_view text);

}  // namespace zerofact
