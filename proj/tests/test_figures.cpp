#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "zerofact/errors.hpp"
#include "zerofact/figures.hpp"

using namespace zerofact;

namespace {

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(fields);
    }
    return rows;
}

}  // namespace

TEST_CASE("curve rows stay inside the sandwich") {
    for (JustificationId id : kAllJustifications) {
        const auto rows = curve_rows(id, 512);
        REQUIRE(rows.size() == 512);
        CHECK(rows.front().t == doctest::Approx(kCurveStart));
        CHECK(rows.back().t == doctest::Approx(kCurveEnd));
        for (const CurveRow& r : rows) {
            CHECK(r.a <= r.gamma);
            CHECK(r.gamma <= r.b);
            CHECK(r.a <= r.symbolic);
            CHECK(r.symbolic <= r.b);
            CHECK(std::abs(r.gamma - oracle::gamma_plus_one(r.t)) <= 1e-9);
        }
    }
}

TEST_CASE("figure CSVs 1-3 parse back into sandwiches") {
    for (int fig = 1; fig <= 3; ++fig) {
        const std::string csv = render_figure_csv({fig, 257, OutputFormat::csv});
        const auto rows = csv_rows(csv);
        REQUIRE(rows.size() == 258);
        CHECK(rows[0] == std::vector<std::string>{"t", "a", "b", "gamma", "symbolic"});
        for (std::size_t i = 1; i < rows.size(); ++i) {
            REQUIRE(rows[i].size() == 5);
            const double t = std::stod(rows[i][0]);
            const double a = std::stod(rows[i][1]);
            const double b = std::stod(rows[i][2]);
            const double g = std::stod(rows[i][3]);
            const double s = std::stod(rows[i][4]);
            CHECK(a <= g);
            CHECK(g <= b);
            CHECK(a <= s);
            CHECK(s <= b);
            if (fig == 3) {
                CHECK(a == doctest::Approx(1.0 / (1.0 + t)).epsilon(1e-9));
                CHECK(b == 1.0);
            }
        }
    }
}

TEST_CASE("figure 1 midpoint values") {
    const auto rows = curve_rows(JustificationId::J1, 3);
    CHECK(rows[1].t == doctest::Approx(0.5));
    CHECK(rows[1].a == doctest::Approx(0.7071067812).epsilon(1e-10));
    CHECK(rows[1].b == doctest::Approx(1.1892071150).epsilon(1e-10));
    CHECK(rows[1].gamma == doctest::Approx(0.8862269255).epsilon(1e-10));
}

TEST_CASE("figure 7 reproduces Table 4 counts") {
    const auto rows = csv_rows(render_figure_csv({7, 512, OutputFormat::csv}));
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"statement_id", "category", "count", "percentage"});
    const std::vector<int> expected = {30, 25, 4, 2, 3, 39, 20, 0, 2, 1};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(rows[i + 1][0] == (i < 5 ? "0" : "4"));
        CHECK(std::stoi(rows[i + 1][2]) == expected[i]);
    }
    CHECK(rows[1][3] == "46.88");
    CHECK(rows[6][3] == "62.90");
}

TEST_CASE("bar figures cover their statements") {
    CHECK(bar_rows(4).size() == 15);
    CHECK(bar_rows(5).front().statement_id == "1b");
    CHECK(bar_rows(6).back().statement_id == "3c");
    CHECK_THROWS_AS(bar_rows(3), UsageError);
}

TEST_CASE("rendering is deterministic") {
    for (int fig = 1; fig <= 7; ++fig) {
        for (OutputFormat f : {OutputFormat::csv, OutputFormat::svg}) {
            const FigureSpec spec{fig, 300, f};
            CHECK(render_figure(spec) == render_figure(spec));
        }
    }
}

TEST_CASE("SVG output is a static document") {
    const std::string svg = render_figure_svg({2, 100, OutputFormat::svg});
    CHECK(svg.starts_with("<svg") == (svg.find("<?xml") == std::string::npos));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<script") == std::string::npos);
    CHECK(figure_series({1, 50, OutputFormat::csv}).size() == 4);
}

TEST_CASE("figure spec validation and emission errors") {
    CHECK_THROWS_AS(FigureSpec({0, 512, OutputFormat::csv}).validate(), UsageError);
    CHECK_THROWS_AS(FigureSpec({8, 512, OutputFormat::csv}).validate(), UsageError);
    CHECK_THROWS_AS(FigureSpec({1, 1, OutputFormat::csv}).validate(), UsageError);
    CHECK_THROWS_AS(emit_figure({1, 10, OutputFormat::csv}, "/nonexistent-dir/fig.csv"), IoError);
}
