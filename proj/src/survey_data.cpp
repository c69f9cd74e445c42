#include "zerofact/survey.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace zerofact {

namespace {

struct PrintedRow {
    std::string_view statement_id;
    std::array<int, 5> counts;
    std::array<double, 5> percent;
};

// Tables 1-4 exactly as printed: counts and percentage columns, in the order
// strongly agree, somewhat agree, neutral, somewhat disagree, strongly disagree.
constexpr std::array<PrintedRow, 11> kPrintedRows = {{
    // Table 1: "the explanation of symbolic t! is helpful"
    {"1a", {21, 34, 5, 1, 1}, {33.87, 54.84, 8.06, 1.61, 1.61}},
    {"2a", {21, 30, 9, 1, 1}, {33.87, 48.39, 14.52, 1.61, 1.61}},
    {"3a", {20, 25, 8, 7, 2}, {32.26, 40.32, 12.90, 11.29, 3.23}},
    // Table 2: "the pictorial summary by the graph aided further ..."
    {"1b", {24, 33, 3, 0, 2}, {38.71, 53.23, 4.84, 0.00, 3.23}},
    {"2b", {28, 29, 4, 0, 1}, {45.16, 46.77, 6.45, 0.00, 1.61}},
    {"3b", {27, 24, 7, 2, 2}, {43.55, 38.71, 11.29, 3.23, 3.23}},
    // Table 3: "justification is helpful in believing that 0! = 1"
    {"1c", {28, 25, 5, 3, 1}, {45.16, 40.32, 8.06, 4.84, 1.61}},
    {"2c", {27, 22, 9, 3, 1}, {43.55, 35.48, 14.52, 4.84, 1.61}},
    {"3c", {22, 22, 11, 5, 2}, {35.48, 35.48, 17.74, 8.06, 3.23}},
    // Table 4: pre-presentation (Statement 0) and post-presentation (Statement 4)
    {"0", {30, 25, 4, 2, 3}, {46.88, 39.06, 6.25, 3.13, 4.69}},
    {"4", {39, 20, 0, 2, 1}, {62.90, 32.26, 0.00, 3.23, 1.61}},
}};

struct PrintedAggregate {
    std::string_view statement_id;
    int count;
    int total;
    double percent;
};

// Aggregate "strongly agree" + "somewhat agree" claims from the results prose.
constexpr std::array<PrintedAggregate, 11> kPrintedAggregates = {{
    {"1a", 55, 62, 88.71}, {"2a", 51, 62, 82.26}, {"3a", 45, 62, 72.85},
    {"1b", 57, 62, 91.94}, {"2b", 57, 62, 91.94}, {"3b", 51, 62, 82.26},
    {"1c", 53, 62, 85.48}, {"2c", 49, 62, 79.03}, {"3c", 44, 62, 70.97},
    {"0", 55, 64, 85.94},  {"4", 59, 62, 95.15},
}};

constexpr double kPrintedResponseRate = 96.88;
constexpr double kPrintedAgreeIncrease = 9.21;
constexpr double kPrintedStronglyAgreeIncrease = 16.02;
// "on the fence, somewhat disagree, or strongly disagree", one decimal
constexpr double kPrintedUndecidedBefore = 14.1;
constexpr double kPrintedUndecidedAfter = 4.8;

std::int64_t to_units(double printed, int decimals) {
    return std::llround(printed * std::pow(10.0, decimals));
}

Comparison compare(std::string key, std::string label, const RoundedPercent& computed, double printed) {
    const bool flagged = computed.units != to_units(printed, computed.decimals);
    return {std::move(key), std::move(label), computed.value(), printed, computed.decimals, flagged};
}

Comparison compare_difference(std::string key, std::string label, std::int64_t computed_units, double printed) {
    RoundedPercent diff{computed_units, 2, 0.0};
    diff.unrounded = diff.value();
    return compare(std::move(key), std::move(label), diff, printed);
}

const StatementTable* find_table(const std::vector<StatementTable>& tables, std::string_view id) {
    const auto it = std::find_if(tables.begin(), tables.end(), [&](const StatementTable& t) { return t.statement_id == id; });
    return it == tables.end() ? nullptr : &*it;
}

}  // namespace

const std::vector<StatementTable>& embedded_tables() {
    static const std::vector<StatementTable> tables = [] {
        std::vector<StatementTable> out;
        for (const PrintedRow& row : kPrintedRows) out.push_back({std::string(row.statement_id), row.counts});
        return out;
    }();
    return tables;
}

int table_number(std::string_view statement_id) {
    if (statement_id == "0" || statement_id == "4") return 4;
    if (statement_id.size() == 2 && statement_id[0] >= '1' && statement_id[0] <= '3') {
        switch (statement_id[1]) {
            case 'a': return 1;
            case 'b': return 2;
            case 'c': return 3;
            default: break;
        }
    }
    return 0;
}

const std::vector<std::string>& known_discrepancy_keys() {
    static const std::vector<std::string> keys = {"aggregate:3a", "aggregate:4", "increase:agree"};
    return keys;
}

std::vector<const Comparison*> SurveyComparison::flagged() const {
    std::vector<const Comparison*> out;
    for (const Comparison& c : items) {
        if (c.flagged) out.push_back(&c);
    }
    return out;
}

std::vector<const Comparison*> SurveyComparison::unexpected_flags() const {
    const auto& known = known_discrepancy_keys();
    std::vector<const Comparison*> out;
    for (const Comparison* c : flagged()) {
        if (std::find(known.begin(), known.end(), c->key) == known.end()) out.push_back(c);
    }
    return out;
}

std::vector<std::string> SurveyComparison::missing_known_flags() const {
    std::vector<std::string> out;
    for (const std::string& key : known_discrepancy_keys()) {
        const auto it = std::find_if(items.begin(), items.end(), [&](const Comparison& c) { return c.key == key; });
        if (it != items.end() && !it->flagged) out.push_back(key);
    }
    return out;
}

SurveyComparison compare_to_paper(const std::vector<StatementTable>& tables) {
    SurveyComparison report;

    for (const PrintedRow& row : kPrintedRows) {
        const StatementTable* table = find_table(tables, row.statement_id);
        if (table == nullptr || table->total() == 0) continue;
        const auto pct = percentages(*table);
        const std::string table_name = "Table " + std::to_string(table_number(row.statement_id));
        for (std::size_t c = 0; c < pct.size(); ++c) {
            const auto token = std::string(likert_token(kLikertCategories[c]));
            report.items.push_back(compare("table" + std::to_string(table_number(row.statement_id)) + ":" +
                                               std::string(row.statement_id) + ":" + token,
                                           table_name + ", statement " + std::string(row.statement_id) + ", " +
                                               std::string(likert_label(kLikertCategories[c])),
                                           pct[c], row.percent[c]));
        }
    }

    for (const PrintedAggregate& claim : kPrintedAggregates) {
        const StatementTable* table = find_table(tables, claim.statement_id);
        if (table == nullptr || table->total() == 0) continue;
        const AggregateAgree agg = aggregate_agree(*table);
        const std::string id(claim.statement_id);
        report.items.push_back({"aggregate_count:" + id, "Agree count, statement " + id + " (of " +
                                    std::to_string(agg.total) + ")",
                                static_cast<double>(agg.count), static_cast<double>(claim.count), 0,
                                agg.count != claim.count || agg.total != claim.total});
        report.items.push_back(compare("aggregate:" + id, "Agree share, statement " + id, agg.percent, claim.percent));
    }

    int responded = 0;
    for (const StatementTable& t : tables) {
        if (is_known_statement(t.statement_id) && t.total() > 0) {
            responded = responded == 0 ? t.total() : std::min(responded, t.total());
        }
    }
    if (responded > 0 && responded <= kInvitedStudents) {
        report.items.push_back(compare("response_rate", "Response rate (" + std::to_string(responded) + "/" +
                                                            std::to_string(kInvitedStudents) + ")",
                                       response_rate(responded, kInvitedStudents), kPrintedResponseRate));
    }

    const StatementTable* before = find_table(tables, "0");
    const StatementTable* after = find_table(tables, "4");
    if (before != nullptr && after != nullptr && before->total() > 0 && after->total() > 0) {
        // Differences of the rounded shares, as they would be read off the tables.
        report.items.push_back(compare_difference("increase:agree", "Agree share increase, statement 0 -> 4",
                                                  aggregate_agree(*after).percent.units -
                                                      aggregate_agree(*before).percent.units,
                                                  kPrintedAgreeIncrease));
        report.items.push_back(compare_difference("increase:strongly_agree",
                                                  "Strongly agree share increase, statement 0 -> 4",
                                                  percentages(*after)[0].units - percentages(*before)[0].units,
                                                  kPrintedStronglyAgreeIncrease));
        const auto undecided = [](const StatementTable& t) {
            return rounded_percent(t.total() - aggregate_agree(t).count, t.total(), 1);
        };
        report.items.push_back(
            compare("undecided:0", "Not agreeing, statement 0", undecided(*before), kPrintedUndecidedBefore));
        report.items.push_back(
            compare("undecided:4", "Not agreeing, statement 4", undecided(*after), kPrintedUndecidedAfter));
    }
    return report;
}

SurveyComparison compare_to_paper() { return compare_to_paper(embedded_tables()); }

}  // namespace zerofact
