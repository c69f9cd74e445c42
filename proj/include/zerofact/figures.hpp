#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "zerofact/bounds.hpp"
#include "zerofact/survey.hpp"

namespace zerofact {

enum class OutputFormat { csv, svg };

enum class StyleHint { lower_bound, upper_bound, gamma, symbolic, bar };

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> samples;  // (t or category index, value)
    StyleHint style = StyleHint::gamma;
};

struct FigureSpec {
    int figure_id = 1;
    int resolution = 512;
    OutputFormat format = OutputFormat::csv;

    /// Throws UsageError for an unknown figure or fewer than 2 curve points.
    void validate() const;
};

inline constexpr double kCurveStart = 0.001;
inline constexpr double kCurveEnd = 0.999;

/// The illustrative "whiteboard" factorial: Gamma(t+1) plus a damped wiggle,
///   Gamma + 0.3 * min(Gamma - a, b - Gamma) * sin(6 pi t),
/// which stays strictly inside [a(t), b(t)] wherever the sandwich is strict.
double symbolic_factorial(JustificationId id, double t);

struct CurveRow {
    double t;
    double a;
    double b;
    double gamma;
    double symbolic;
};

/// Figures 1-3: `resolution` points evenly spaced on [0.001, 0.999].
std::vector<CurveRow> curve_rows(JustificationId id, int resolution);

struct BarRow {
    std::string statement_id;
    LikertCategory category;
    int count;
    RoundedPercent percent;
};

/// Figures 4-7: statements 1a/2a/3a, 1b/2b/3b, 1c/2c/3c and 0/4.
std::vector<BarRow> bar_rows(int figure_id, const std::vector<StatementTable>& tables = embedded_tables());

/// Series view of a figure (four curves, or one bar series per statement).
std::vector<PlotSeries> figure_series(const FigureSpec& spec);

/// Canonical CSV. Curves: `t,a,b,gamma,symbolic`; bars:
/// `statement_id,category,count,percentage`. Numbers use fixed notation
/// with 10 decimals for curves and 2 for percentages; LF line endings.
std::string render_figure_csv(const FigureSpec& spec);

/// Static SVG rendering of the same data (no scripting).
std::string render_figure_svg(const FigureSpec& spec);

std::string render_figure(const FigureSpec& spec);

/// Writes render_figure(spec) to `path`; throws IoError when it cannot.
void emit_figure(const FigureSpec& spec, const std::filesystem::path& path);

}  // namespace zerofact
