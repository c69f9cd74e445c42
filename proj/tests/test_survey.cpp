#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "zerofact/errors.hpp"
#include "zerofact/special.hpp"
#include "zerofact/survey.hpp"

using namespace zerofact;

namespace {

const StatementTable& table(std::string_view id) {
    const auto& all = embedded_tables();
    return *std::find_if(all.begin(), all.end(), [&](const StatementTable& t) { return t.statement_id == id; });
}

PairedResponses fixture() {
    return {{{3, 4}, {4, 5}, {2, 3}, {5, 5}, {3, 4}}};
}

}  // namespace

TEST_CASE("incomplete beta and Student t against closed forms") {
    for (double x : {0.0, 0.01, 0.2, 0.5, 0.9, 1.0}) {
        CHECK(regularized_incomplete_beta(2.0, 0.5, x) == doctest::Approx(oracle::incomplete_beta_2_half(x)).epsilon(1e-13));
    }
    // I_x(1, 1) = x, I_x(a, 1) = x^a
    CHECK(regularized_incomplete_beta(1.0, 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-14));
    CHECK(regularized_incomplete_beta(3.5, 1.0, 0.6) == doctest::Approx(std::pow(0.6, 3.5)).epsilon(1e-13));
    // Cauchy
    CHECK(student_t_cdf(1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(student_t_cdf(0.0, 7.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (double t : {-3.0, -0.5, 0.7, 2.5}) {
        CHECK(student_t_cdf(t, 4.0) + student_t_cdf(-t, 4.0) == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("paired t-test fixture") {
    const TTestResult r = paired_t_test(fixture());
    CHECK(r.n == 5);
    CHECK(r.df == 4);
    CHECK(r.mean_diff == doctest::Approx(-0.8));
    CHECK(r.t_stat == doctest::Approx(-4.0).epsilon(1e-12));
    // P(T_4 <= -4) = I_{4/(4+16)}(2, 1/2) / 2
    const double closed_form = 0.5 * oracle::incomplete_beta_2_half(0.2);
    CHECK(std::abs(closed_form - 0.00807) <= 1e-5);
    CHECK(std::abs(r.p_one_sided - closed_form) <= 1e-12);
    CHECK(r.p_two_sided == doctest::Approx(2.0 * closed_form).epsilon(1e-12));
    CHECK(r.p_value() == r.p_one_sided);
    CHECK(paired_t_test(fixture(), Alternative::two_sided).p_value() == r.p_two_sided);
}

TEST_CASE("property: random small datasets match the integration oracle") {
    oracle::SplitMix64 rng{77};
    int tested = 0;
    while (tested < 100) {
        PairedResponses data;
        const int n = rng.uniform_int(2, 30);
        for (int i = 0; i < n; ++i) data.pairs.emplace_back(rng.uniform_int(1, 5), rng.uniform_int(1, 5));
        double first = data.pairs[0].first - data.pairs[0].second;
        const bool constant = std::all_of(data.pairs.begin(), data.pairs.end(),
                                          [&](auto p) { return p.first - p.second == first; });
        if (constant) continue;
        const TTestResult r = paired_t_test(data);
        // independent t statistic
        std::vector<double> d;
        for (auto [b, a] : data.pairs) d.push_back(b - a);
        const double mean = std::accumulate(d.begin(), d.end(), 0.0) / n;
        double ss = 0.0;
        for (double x : d) ss += (x - mean) * (x - mean);
        const double t = mean / (std::sqrt(ss / (n - 1)) / std::sqrt(n));
        CAPTURE(n);
        CHECK(r.t_stat == doctest::Approx(t).epsilon(1e-12));
        CHECK(std::abs(r.p_one_sided - oracle::student_t_cdf(t, n - 1)) <= 1e-8);
        ++tested;
    }
}

TEST_CASE("t-test degenerate inputs") {
    CHECK_THROWS_AS(paired_t_test({{{3, 4}}}), InsufficientDataError);
    CHECK_THROWS_AS(paired_t_test({}), InsufficientDataError);
    CHECK_THROWS_AS(paired_t_test({{{3, 4}, {2, 3}, {5, 6}}}), DomainError);
    CHECK_THROWS_AS(paired_t_test({{{3, 4}, {2, 3}, {4, 5}}}), DegenerateVarianceError);
    CHECK_THROWS_AS(paired_t_test({{{3, 3}, {2, 2}}}), DegenerateVarianceError);
}

TEST_CASE("p-value is monotone in the shift") {
    double previous = 1.0;
    for (int shift = 0; shift <= 3; ++shift) {
        PairedResponses d{{{1, 1 + shift}, {2, 2 + shift}, {2, 3 + shift}, {1, 2 + shift}}};
        for (auto& p : d.pairs) p.second = std::min(p.second, 5);
        const double p = paired_t_test(d).p_one_sided;
        CHECK(p <= previous);
        previous = p;
    }
}

TEST_CASE("Likert coding is a bijection") {
    std::set<int> codes;
    for (LikertCategory c : kLikertCategories) {
        codes.insert(likert_code(c));
        CHECK(likert_from_code(likert_code(c)) == c);
        CHECK(parse_likert_token(likert_token(c)) == c);
    }
    CHECK(codes == std::set<int>{1, 2, 3, 4, 5});
    CHECK(likert_code(LikertCategory::strongly_agree) == 5);
    CHECK(likert_code(LikertCategory::strongly_disagree) == 1);
    CHECK_FALSE(parse_likert_token("agree").has_value());
    CHECK_THROWS_AS(likert_from_code(0), DomainError);
}

TEST_CASE("embedded tables") {
    const auto& tables = embedded_tables();
    REQUIRE(tables.size() == 11);
    const std::vector<std::string> order = {"1a", "2a", "3a", "1b", "2b", "3b", "1c", "2c", "3c", "0", "4"};
    for (std::size_t i = 0; i < order.size(); ++i) {
        CHECK(tables[i].statement_id == order[i]);
        CHECK(is_known_statement(order[i]));
        CHECK(tables[i].total() == (order[i] == "0" ? 64 : 62));
    }
    CHECK(table_number("2b") == 2);
    CHECK(table_number("0") == 4);
    CHECK(table_number("5") == 0);
    CHECK_FALSE(is_known_statement("1d"));
}

TEST_CASE("percentages: exact half-up rounding and sums") {
    CHECK(rounded_percent(1, 8).units == 1250);
    CHECK(rounded_percent(1, 64).units == 156);   // 1.5625 -> 1.56
    CHECK(rounded_percent(3, 64).units == 469);   // 4.6875 -> 4.69
    CHECK(rounded_percent(2, 64).units == 313);   // 3.125 -> 3.13 (half up)
    CHECK(rounded_percent(1, 3, 1).value() == doctest::Approx(33.3));
    CHECK_THROWS_AS(rounded_percent(1, 0), DomainError);
    for (const StatementTable& t : embedded_tables()) {
        const auto pct = percentages(t);
        double sum = 0.0;
        for (const auto& p : pct) sum += p.value();
        CAPTURE(t.statement_id);
        CHECK(std::abs(sum - 100.0) <= 0.02 + 1e-9);
    }
    CHECK_THROWS_AS(percentages(StatementTable{"1a", {}}), DomainError);
}

TEST_CASE("aggregate agreement and response rate") {
    const AggregateAgree a = aggregate_agree(table("1a"));
    CHECK(a.count == 55);
    CHECK(a.total == 62);
    CHECK(a.percent.value() == doctest::Approx(88.71));
    CHECK(aggregate_agree(table("3a")).percent.value() == doctest::Approx(72.58));
    CHECK(aggregate_agree(table("0")).percent.value() == doctest::Approx(85.94));
    CHECK(response_rate(62, 64).value() == doctest::Approx(96.88));
    CHECK(response_rate(64, 64).value() == 100.0);
    CHECK(response_rate(0, 64).value() == 0.0);
    CHECK_THROWS_AS(response_rate(65, 64), DomainError);
    CHECK_THROWS_AS(response_rate(1, 0), DomainError);
}

TEST_CASE("comparison with the printed figures flags exactly the known three") {
    const SurveyComparison cmp = compare_to_paper();
    CHECK(cmp.unexpected_flags().empty());
    CHECK(cmp.missing_known_flags().empty());
    const auto flagged = cmp.flagged();
    REQUIRE(flagged.size() == 3);
    std::set<std::string> keys;
    for (const Comparison* c : flagged) keys.insert(c->key);
    CHECK(keys == std::set<std::string>{"aggregate:3a", "aggregate:4", "increase:agree"});
    for (const Comparison& c : cmp.items) {
        if (c.key == "aggregate:3a") {
            CHECK(c.computed == doctest::Approx(72.58));
            CHECK(c.printed == doctest::Approx(72.85));
        } else if (c.key == "aggregate:4") {
            CHECK(c.computed == doctest::Approx(95.16));
        } else if (c.key == "increase:agree") {
            CHECK(c.computed == doctest::Approx(9.22));
        } else if (c.key == "increase:strongly_agree") {
            CHECK_FALSE(c.flagged);
            CHECK(c.computed == doctest::Approx(16.02));
        } else if (!c.flagged) {
            CHECK(std::abs(c.computed - c.printed) <= 0.01 + 1e-9);
        }
    }
    // 55 cells, 11 aggregate claims and the scalars
    CHECK(std::count_if(cmp.items.begin(), cmp.items.end(), [](const Comparison& c) { return c.key.starts_with("table"); }) == 55);
}

TEST_CASE("a corrupted table produces unexpected flags") {
    auto tables = embedded_tables();
    tables[0].counts[0] += 1;
    tables[0].counts[1] -= 1;
    CHECK_FALSE(compare_to_paper(tables).unexpected_flags().empty());
}

TEST_CASE("dual-responder restriction and marginal consistency") {
    CHECK(restrict_to_dual_responders(table("0"), 62) == std::array<int, 5>{29, 24, 4, 2, 3});
    CHECK(restrict_to_dual_responders(table("4"), 62) == table("4").counts);
    CHECK_THROWS_AS(restrict_to_dual_responders(table("4"), 63), DomainError);

    const PairedResponses synth = synthetic_pairing(table("0"), table("4"), 42);
    CHECK(synth.pairs.size() == 62);
    CHECK(marginal_consistency(synth, table("0"), table("4")));
    CHECK(synthetic_pairing(table("0"), table("4"), 42).pairs == synth.pairs);
    CHECK(synthetic_pairing(table("0"), table("4"), 43).pairs != synth.pairs);

    PairedResponses recoded = synth;
    recoded.pairs[0].first = recoded.pairs[0].first == 5 ? 4 : 5;
    CHECK_FALSE(marginal_consistency(recoded, table("0"), table("4")));
    CHECK_FALSE(marginal_consistency({}, table("0"), table("4")));
}

TEST_CASE("tables CSV") {
    const auto parsed = parse_tables_csv(
        "statement_id,category,count\r\n1a,strongly_agree,21\n1a,somewhat_agree,34\n1a,neutral,5\n"
        "1a,somewhat_disagree,1\n1a,strongly_disagree,1\n\n4,strongly_agree,39\n");
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].counts == table("1a").counts);
    CHECK(parsed[1].statement_id == "4");
    CHECK(parsed[1].total() == 39);

    const auto line_of = [](std::string_view text) {
        try {
            parse_tables_csv(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.line());
        }
        return -1L;
    };
    CHECK(line_of("statement_id,category,count\n1a,neutral,abc\n") == 2);
    CHECK(line_of("statement_id,category,count\n1a,neutral,1\n9z,neutral,1\n") == 3);
    CHECK(line_of("statement_id,category,count\n1a,agree,1\n") == 2);
    CHECK(line_of("statement_id,category,count\n1a,neutral,-1\n") == 2);
    CHECK(line_of("statement_id,category,count\n1a,neutral\n") == 2);
    CHECK(line_of("statement_id,category,count\n1a,neutral,1\n1a,neutral,2\n") == 3);
    CHECK(line_of("id,cat,n\n") == 1);
    CHECK_THROWS_AS(read_tables_csv("/nonexistent/zerofact.csv"), ParseError);
}

TEST_CASE("pairs CSV") {
    const PairedResponses p = parse_pairs_csv("respondent_id,before,after\nr1,3,4\nr2,4,5\nr3,2,3\nr4,5,5\nr5,3,4\n");
    CHECK(p.pairs == fixture().pairs);
    CHECK_THROWS_AS(parse_pairs_csv("respondent_id,before,after\nr1,3,6\n"), ParseError);
    CHECK_THROWS_AS(parse_pairs_csv("respondent_id,before,after\n,3,4\n"), ParseError);
}
