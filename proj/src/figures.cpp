#include "zerofact/figures.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "zerofact/errors.hpp"
#include "zerofact/squeeze.hpp"

namespace zerofact {

namespace {

constexpr double kWiggleAmplitude = 0.3;
constexpr double kWiggleFrequency = 6.0 * std::numbers::pi;

JustificationId curve_justification(int figure_id) {
    switch (figure_id) {
        case 1: return JustificationId::J1;
        case 2: return JustificationId::J2;
        default: return JustificationId::J3;
    }
}

std::array<std::string_view, 3> bar_statements(int figure_id) {
    switch (figure_id) {
        case 4: return {"1a", "2a", "3a"};
        case 5: return {"1b", "2b", "3b"};
        case 6: return {"1c", "2c", "3c"};
        default: return {"0", "4", ""};
    }
}

std::string_view figure_title(int figure_id) {
    switch (figure_id) {
        case 1: return "Justification 1: (t/2)^(t/2) <= t! <= 2^(t^2)";
        case 2: return "Justification 2: ((t+1)/2)^t <= t! <= 1";
        case 3: return "Justification 3: 1/(1+t) <= t! <= 1";
        case 4: return "The explanation of symbolic t! is helpful (1a, 2a, 3a)";
        case 5: return "The pictorial summary aided to conceptualize 0! = 1 (1b, 2b, 3b)";
        case 6: return "Justification is helpful in believing 0! = 1 (1c, 2c, 3c)";
        default: return "0! = 1 is believable: before (0) and after (4)";
    }
}

std::string_view series_colour(StyleHint style, std::size_t index) {
    switch (style) {
        case StyleHint::lower_bound: return "red";
        case StyleHint::upper_bound: return "blue";
        case StyleHint::gamma: return "black";
        case StyleHint::symbolic: return "green";
        case StyleHint::bar: break;
    }
    static constexpr std::array<std::string_view, 3> kBarColours = {"#4e79a7", "#f28e2b", "#59a14f"};
    return kBarColours[index % kBarColours.size()];
}

std::string xml_escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void FigureSpec::validate() const {
    if (figure_id < 1 || figure_id > 7) throw UsageError(fmt::format("unknown figure {} (expected 1..7)", figure_id));
    if (resolution < 2) throw UsageError("figure resolution must be at least 2");
}

double symbolic_factorial(JustificationId id, double t) {
    const BoundPair pair = bound_pair(id);
    const double gamma = gamma_plus_one(t);
    const double room = std::min(gamma - pair.lower(t), pair.upper(t) - gamma);
    return gamma + kWiggleAmplitude * room * std::sin(kWiggleFrequency * t);
}

std::vector<CurveRow> curve_rows(JustificationId id, int resolution) {
    if (resolution < 2) throw UsageError("figure resolution must be at least 2");
    const BoundPair pair = bound_pair(id);
    std::vector<CurveRow> rows;
    rows.reserve(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        const double t = kCurveStart + (kCurveEnd - kCurveStart) * static_cast<double>(i) / (resolution - 1);
        rows.push_back({t, pair.lower(t), pair.upper(t), gamma_plus_one(t), symbolic_factorial(id, t)});
    }
    return rows;
}

std::vector<BarRow> bar_rows(int figure_id, const std::vector<StatementTable>& tables) {
    if (figure_id < 4 || figure_id > 7) throw UsageError(fmt::format("figure {} is not a bar chart", figure_id));
    std::vector<BarRow> rows;
    for (std::string_view id : bar_statements(figure_id)) {
        if (id.empty()) continue;
        const auto it =
            std::find_if(tables.begin(), tables.end(), [&](const StatementTable& t) { return t.statement_id == id; });
        if (it == tables.end()) throw UsageError(fmt::format("no data for statement {}", id));
        const auto pct = percentages(*it);
        for (std::size_t c = 0; c < kLikertCategories.size(); ++c) {
            rows.push_back({std::string(id), kLikertCategories[c], it->counts[c], pct[c]});
        }
    }
    return rows;
}

std::vector<PlotSeries> figure_series(const FigureSpec& spec) {
    spec.validate();
    std::vector<PlotSeries> series;
    if (spec.figure_id <= 3) {
        const auto rows = curve_rows(curve_justification(spec.figure_id), spec.resolution);
        series = {{"a(t)", {}, StyleHint::lower_bound},
                  {"b(t)", {}, StyleHint::upper_bound},
                  {"Gamma(t+1)", {}, StyleHint::gamma},
                  {"symbolic t! (illustrative)", {}, StyleHint::symbolic}};
        for (const CurveRow& r : rows) {
            series[0].samples.emplace_back(r.t, r.a);
            series[1].samples.emplace_back(r.t, r.b);
            series[2].samples.emplace_back(r.t, r.gamma);
            series[3].samples.emplace_back(r.t, r.symbolic);
        }
        return series;
    }
    for (const BarRow& row : bar_rows(spec.figure_id)) {
        if (series.empty() || series.back().name != "Statement " + row.statement_id) {
            series.push_back({"Statement " + row.statement_id, {}, StyleHint::bar});
        }
        series.back().samples.emplace_back(static_cast<double>(series.back().samples.size()),
                                           static_cast<double>(row.count));
    }
    return series;
}

std::string render_figure_csv(const FigureSpec& spec) {
    spec.validate();
    std::string out;
    if (spec.figure_id <= 3) {
        out = "t,a,b,gamma,symbolic\n";
        for (const CurveRow& r : curve_rows(curve_justification(spec.figure_id), spec.resolution)) {
            out += fmt::format("{:.10f},{:.10f},{:.10f},{:.10f},{:.10f}\n", r.t, r.a, r.b, r.gamma, r.symbolic);
        }
        return out;
    }
    out = "statement_id,category,count,percentage\n";
    for (const BarRow& r : bar_rows(spec.figure_id)) {
        out += fmt::format("{},{},{},{:.2f}\n", r.statement_id, likert_token(r.category), r.count, r.percent.value());
    }
    return out;
}

std::string render_figure_svg(const FigureSpec& spec) {
    constexpr double kWidth = 640.0;
    constexpr double kHeight = 400.0;
    constexpr double kLeft = 60.0;
    constexpr double kRight = 20.0;
    constexpr double kTop = 40.0;
    constexpr double kBottom = 50.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;

    const std::vector<PlotSeries> series = figure_series(spec);
    const bool bars = spec.figure_id >= 4;

    double y_min = bars ? 0.0 : std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.samples) {
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    }
    const double margin = 0.05 * (y_max - y_min);
    if (!bars) y_min -= margin;
    y_max += margin;
    const auto sy = [&](double y) { return kTop + plot_h * (1.0 - (y - y_min) / (y_max - y_min)); };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\">\n",
        kWidth, kHeight, kWidth, kHeight);
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += fmt::format("<text x=\"{:.2f}\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\" "
                       "text-anchor=\"middle\">{}</text>\n",
                       kWidth / 2.0, xml_escape(figure_title(spec.figure_id)));
    out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
                       "stroke=\"#888\"/>\n",
                       kLeft, kTop, plot_w, plot_h);
    for (int i = 0; i <= 4; ++i) {
        const double y = y_min + (y_max - y_min) * i / 4.0;
        out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"10\" "
                           "text-anchor=\"end\">{:.3g}</text>\n",
                           kLeft - 6.0, sy(y) + 3.0, y);
    }

    if (!bars) {
        const auto sx = [&](double t) { return kLeft + plot_w * t; };
        for (std::size_t i = 0; i < series.size(); ++i) {
            const PlotSeries& s = series[i];
            out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\"{} points=\"",
                               series_colour(s.style, i),
                               s.style == StyleHint::symbolic ? " stroke-dasharray=\"4 3\"" : "");
            for (std::size_t j = 0; j < s.samples.size(); ++j) {
                out += fmt::format("{}{:.2f},{:.2f}", j == 0 ? "" : " ", sx(s.samples[j].first), sy(s.samples[j].second));
            }
            out += "\"/>\n";
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
                               "fill=\"{}\">{}</text>\n",
                               kLeft + 10.0, kTop + 14.0 + 14.0 * static_cast<double>(i), series_colour(s.style, i),
                               xml_escape(s.name));
        }
        for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"10\" "
                               "text-anchor=\"middle\">{:.2f}</text>\n",
                               sx(t), kTop + plot_h + 16.0, t);
        }
    } else {
        const double group_w = plot_w / static_cast<double>(kLikertCategories.size());
        const double bar_w = 0.8 * group_w / static_cast<double>(series.size());
        for (std::size_t i = 0; i < series.size(); ++i) {
            const PlotSeries& s = series[i];
            for (const auto& [slot, count] : s.samples) {
                const double x = kLeft + group_w * slot + 0.1 * group_w + bar_w * static_cast<double>(i);
                out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
                                   "fill=\"{}\"/>\n",
                                   x, sy(count), bar_w, sy(0.0) - sy(count), series_colour(s.style, i));
            }
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
                               "fill=\"{}\">{}</text>\n",
                               kLeft + plot_w - 90.0, kTop + 14.0 + 14.0 * static_cast<double>(i),
                               series_colour(s.style, i), xml_escape(s.name));
        }
        for (std::size_t c = 0; c < kLikertCategories.size(); ++c) {
            out += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"9\" "
                               "text-anchor=\"middle\">{}</text>\n",
                               kLeft + group_w * (static_cast<double>(c) + 0.5), kTop + plot_h + 16.0,
                               xml_escape(likert_label(kLikertCategories[c])));
        }
    }
    out += "</svg>\n";
    return out;
}

std::string render_figure(const FigureSpec& spec) {
    return spec.format == OutputFormat::csv ? render_figure_csv(spec) : render_figure_svg(spec);
}

void emit_figure(const FigureSpec& spec, const std::filesystem::path& path) {
    const std::string content = render_figure(spec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace zerofact
