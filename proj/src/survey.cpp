#include "zerofact/survey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "zerofact/errors.hpp"
#include "zerofact/special.hpp"

namespace zerofact {

int likert_code(LikertCategory category) { return 5 - static_cast<int>(category); }

LikertCategory likert_from_code(int code) {
    if (code < 1 || code > 5) throw DomainError("likert code must lie in 1..5, got " + std::to_string(code));
    return static_cast<LikertCategory>(5 - code);
}

std::string_view likert_token(LikertCategory category) {
    switch (category) {
        case LikertCategory::strongly_agree: return "strongly_agree";
        case LikertCategory::somewhat_agree: return "somewhat_agree";
        case LikertCategory::neutral: return "neutral";
        case LikertCategory::somewhat_disagree: return "somewhat_disagree";
        case LikertCategory::strongly_disagree: return "strongly_disagree";
    }
    return "";
}

std::string_view likert_label(LikertCategory category) {
    switch (category) {
        case LikertCategory::strongly_agree: return "Strongly agree";
        case LikertCategory::somewhat_agree: return "Somewhat agree";
        case LikertCategory::neutral: return "Neither agree nor disagree";
        case LikertCategory::somewhat_disagree: return "Somewhat disagree";
        case LikertCategory::strongly_disagree: return "Strongly disagree";
    }
    return "";
}

std::optional<LikertCategory> parse_likert_token(std::string_view token) {
    for (LikertCategory c : kLikertCategories) {
        if (likert_token(c) == token) return c;
    }
    return std::nullopt;
}

bool is_known_statement(std::string_view id) {
    static constexpr std::array<std::string_view, 11> kIds = {"0",  "1a", "1b", "1c", "2a", "2b",
                                                              "2c", "3a", "3b", "3c", "4"};
    return std::find(kIds.begin(), kIds.end(), id) != kIds.end();
}

int StatementTable::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

double RoundedPercent::value() const {
    return static_cast<double>(units) / std::pow(10.0, decimals);
}

RoundedPercent rounded_percent(std::int64_t part, std::int64_t whole, int decimals) {
    if (whole <= 0) throw DomainError("percentage of an empty total");
    if (part < 0) throw DomainError("percentage of a negative count");
    std::int64_t scale = 100;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    // floor(part * scale / whole + 1/2)
    const std::int64_t units = (2 * part * scale + whole) / (2 * whole);
    return {units, decimals, 100.0 * static_cast<double>(part) / static_cast<double>(whole)};
}

std::array<RoundedPercent, 5> percentages(const StatementTable& table) {
    const int total = table.total();
    if (total <= 0) throw DomainError("percentages: statement " + table.statement_id + " has no responses");
    std::array<RoundedPercent, 5> out;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = rounded_percent(table.counts[i], total);
    return out;
}

AggregateAgree aggregate_agree(const StatementTable& table) {
    const int agree = table.count(LikertCategory::strongly_agree) + table.count(LikertCategory::somewhat_agree);
    const int total = table.total();
    return {agree, total, rounded_percent(agree, total)};
}

RoundedPercent response_rate(int responded, int invited) {
    if (invited <= 0) throw DomainError("response_rate: nobody was invited");
    if (responded < 0 || responded > invited) throw DomainError("response_rate: responded must lie in [0, invited]");
    return rounded_percent(responded, invited);
}

void PairedResponses::validate() const {
    for (const auto& [before, after] : pairs) {
        if (before < 1 || before > 5 || after < 1 || after > 5) {
            throw DomainError("paired responses: likert codes must lie in 1..5");
        }
    }
}

TTestResult paired_t_test(const PairedResponses& data, Alternative alternative) {
    data.validate();
    const std::size_t n = data.pairs.size();
    if (n < 2) throw InsufficientDataError("paired t-test needs at least two pairs");

    std::vector<double> diffs;
    diffs.reserve(n);
    for (const auto& [before, after] : data.pairs) diffs.push_back(static_cast<double>(before - after));
    if (std::all_of(diffs.begin(), diffs.end(), [&](double d) { return d == diffs.front(); })) {
        throw DegenerateVarianceError("paired t-test undefined: all differences are equal");
    }

    const double nd = static_cast<double>(n);
    const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / nd;
    double ss = 0.0;
    for (double d : diffs) ss += (d - mean) * (d - mean);

    TTestResult r;
    r.n = static_cast<int>(n);
    r.df = r.n - 1;
    r.mean_diff = mean;
    r.sd_diff = std::sqrt(ss / (nd - 1.0));
    r.t_stat = mean / (r.sd_diff / std::sqrt(nd));
    r.p_one_sided = student_t_cdf(r.t_stat, static_cast<double>(r.df));
    r.p_two_sided = std::min(1.0, 2.0 * std::min(r.p_one_sided, 1.0 - r.p_one_sided));
    r.alternative = alternative;
    return r;
}

std::array<int, 5> restrict_to_dual_responders(const StatementTable& table, int n) {
    const int surplus = table.total() - n;
    if (surplus < 0) {
        throw DomainError("statement " + table.statement_id + " has fewer responses than the paired sample");
    }
    std::array<int, 5> counts = table.counts;
    std::array<std::size_t, 5> order{0, 1, 2, 3, 4};
    // stable_sort keeps category order (higher code first) among ties
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return table.counts[a] > table.counts[b]; });
    int removed = 0;
    for (std::size_t i = 0; removed < surplus; i = (i + 1) % order.size()) {
        if (counts[order[i]] > 0) {
            --counts[order[i]];
            ++removed;
        }
    }
    return counts;
}

bool marginal_consistency(const PairedResponses& data,
                          const StatementTable& before_table,
                          const StatementTable& after_table) {
    const int n = static_cast<int>(data.pairs.size());
    if (before_table.total() < n || after_table.total() != n) return false;

    std::array<int, 5> before{};
    std::array<int, 5> after{};
    for (const auto& [b, a] : data.pairs) {
        if (b < 1 || b > 5 || a < 1 || a > 5) return false;
        ++before[static_cast<std::size_t>(likert_from_code(b))];
        ++after[static_cast<std::size_t>(likert_from_code(a))];
    }
    return before == restrict_to_dual_responders(before_table, n) && after == after_table.counts;
}

PairedResponses synthetic_pairing(const StatementTable& before_table,
                                  const StatementTable& after_table,
                                  std::uint64_t seed) {
    const int n = after_table.total();
    const std::array<int, 5> before_counts = restrict_to_dual_responders(before_table, n);

    std::vector<int> before_codes;
    std::vector<int> after_codes;
    for (std::size_t c = 0; c < kLikertCategories.size(); ++c) {
        const int code = likert_code(kLikertCategories[c]);
        before_codes.insert(before_codes.end(), static_cast<std::size_t>(before_counts[c]), code);
        after_codes.insert(after_codes.end(), static_cast<std::size_t>(after_table.counts[c]), code);
    }

    std::mt19937_64 engine(seed);
    for (std::size_t i = after_codes.size(); i-- > 1;) {
        const std::size_t j = static_cast<std::size_t>(engine() % (i + 1));
        std::swap(after_codes[i], after_codes[j]);
    }

    PairedResponses out;
    for (std::size_t i = 0; i < before_codes.size(); ++i) out.pairs.emplace_back(before_codes[i], after_codes[i]);
    return out;
}

}  // namespace zerofact
