#include "zerofact/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace zerofact {

namespace {

// Kronrod abscissae (positive half, descending) and weights; Gauss weights
// belong to the odd-indexed Kronrod nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a;
    double b;
    double value;
    double error;
    double roundoff;  // share of `error` that bisection cannot remove
    int depth;
};

struct ByError {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;  // deterministic tie-break: leftmost panel first
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    double abs_sum = std::abs(kronrod);

    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        kronrod += kKronrodWeights[j] * (f1 + f2);
        abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
    }

    const double value = kronrod * half;
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::abs(half);
    const double error = std::abs((kronrod - gauss) * half) + roundoff;
    return {a, b, value, error, roundoff, depth};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> breakpoints,
                                    double abs_tol,
                                    int max_depth) {
    if (breakpoints.size() < 2) throw std::invalid_argument("integrate_adaptive: need two breakpoints");
    if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate_adaptive: tolerance must be positive");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i] > breakpoints[i - 1]))
            throw std::invalid_argument("integrate_adaptive: breakpoints must increase");
    }

    std::priority_queue<Panel, std::vector<Panel>, ByError> active;
    std::vector<Panel> finished;
    double total_error = 0.0;
    double total_roundoff = 0.0;
    double frozen_error = 0.0;

    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        Panel p = evaluate_panel(f, breakpoints[i - 1], breakpoints[i], 0);
        total_error += p.error;
        total_roundoff += p.roundoff;
        active.push(p);
    }

    // Give up early once frozen panels or the roundoff floor alone exceed
    // the tolerance; further bisection cannot reach it.
    constexpr std::size_t kPanelLimit = 200000;
    while (total_error > abs_tol && !active.empty() && frozen_error <= abs_tol && total_roundoff <= abs_tol) {
        Panel worst = active.top();
        active.pop();
        if (worst.depth >= max_depth || active.size() + finished.size() > kPanelLimit) {
            frozen_error += worst.error;
            finished.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1);
        Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1);
        total_error += left.error + right.error - worst.error;
        total_roundoff += left.roundoff + right.roundoff - worst.roundoff;
        active.push(left);
        active.push(right);
    }

    while (!active.empty()) {
        finished.push_back(active.top());
        active.pop();
    }
    // Sum in left-to-right order so the result does not depend on heap layout.
    std::sort(finished.begin(), finished.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });

    QuadratureResult result;
    double err = 0.0;
    for (const Panel& p : finished) {
        result.value += p.value;
        err += p.error;
    }
    result.error = err;
    result.converged = err <= abs_tol;
    result.panels = static_cast<int>(finished.size());
    return result;
}

}  // namespace zerofact
