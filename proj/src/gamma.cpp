#include "zerofact/gamma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zerofact/errors.hpp"
#include "zerofact/quadrature.hpp"

namespace zerofact {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kSeriesRelativeBound = 1e-13;
constexpr double kMaxMomentOrder = 170.0;

void require_unit_interval(double t, const char* who) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw DomainError(std::string(who) + ": t must lie in [0, 1], got " + std::to_string(t));
    }
}

}  // namespace

std::string_view to_string(GammaMethod method) {
    switch (method) {
        case GammaMethod::series_approx: return "series_approx";
        case GammaMethod::quadrature: return "quadrature";
    }
    return "unknown";
}

void QuadratureSpec::validate() const {
    if (!(upper_truncation > 1.0)) throw DomainError("QuadratureSpec: upper_truncation must exceed 1");
    if (!(abs_tolerance > 0.0)) throw DomainError("QuadratureSpec: abs_tolerance must be positive");
    if (max_depth < 1) throw DomainError("QuadratureSpec: max_depth must be at least 1");
}

std::uint64_t factorial_int(int n) {
    if (n < 0) throw DomainError("factorial_int: n must be non-negative");
    if (n > kMaxExactFactorial) {
        throw OverflowError("factorial_int: " + std::to_string(n) +
                            "! overflows 64 bits; use log_factorial");
    }
    std::uint64_t product = 1;
    for (int k = 2; k <= n; ++k) product *= static_cast<std::uint64_t>(k);
    return product;
}

double log_factorial(int n) {
    if (n < 0) throw DomainError("log_factorial: n must be non-negative");
    double sum = 0.0;
    for (int k = 2; k <= n; ++k) sum += std::log(static_cast<double>(k));
    return sum;
}

GammaResult gamma_plus_one_series(double t) {
    require_unit_interval(t, "gamma_plus_one_series");

    // Gamma(t+1) = sqrt(2 pi) (t + g + 1/2)^{t + 1/2} e^{-(t + g + 1/2)} A_g(t)
    double series = kLanczosCoefficients[0];
    for (std::size_t k = 1; k < kLanczosCoefficients.size(); ++k) {
        series += kLanczosCoefficients[k] / (t + static_cast<double>(k));
    }
    const double base = t + kLanczosG + 0.5;
    const double value = std::sqrt(2.0 * std::numbers::pi) * std::pow(base, t + 0.5) * std::exp(-base) * series;
    return {value, kSeriesRelativeBound * value, GammaMethod::series_approx};
}

double power_exponential_tail_bound(double p, double upper) {
    if (!(upper > p)) throw DomainError("power_exponential_tail_bound: need U > p");
    // x^p e^{-x} <= U^p e^{-U} e^{-(1 - p/U)(x - U)} for x >= U
    return std::exp(p * std::log(upper) - upper) / (1.0 - p / upper);
}

GammaResult power_exponential_integral(double p, const QuadratureSpec& spec) {
    spec.validate();
    if (!(p >= 0.0 && p <= kMaxMomentOrder)) {
        throw DomainError("power_exponential_integral: order must lie in [0, 170]");
    }

    const double log_scale = p > 1.0 ? p * std::log(p) - p : 0.0;
    double upper = spec.upper_truncation;
    if (p > 1.0) upper = std::max(upper, 2.0 * p + 8.0 * std::sqrt(p) + 40.0);

    std::vector<double> breaks{0.0};
    for (double x = 1.0; x < upper; x *= 2.0) breaks.push_back(x);
    if (p > 1.0) {
        for (double x : {p - std::sqrt(p), p, p + std::sqrt(p)}) {
            if (x > 0.0 && x < upper) breaks.push_back(x);
        }
    }
    breaks.push_back(upper);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

    const auto integrand = [p, log_scale](double x) {
        return std::exp(p * std::log(x) - x - log_scale);
    };
    const QuadratureResult q = integrate_adaptive(integrand, breaks, spec.abs_tolerance, spec.max_depth);

    const double scale = std::exp(log_scale);
    const double tail = power_exponential_tail_bound(p, upper);
    const double value = q.value * scale;
    const double error = q.error * scale + tail;
    if (!q.converged) {
        throw ConvergenceError("power_exponential_integral: refinement budget exhausted", value, error);
    }
    return {value, error, GammaMethod::quadrature};
}

GammaResult gamma_plus_one_quadrature(double t, const QuadratureSpec& spec) {
    require_unit_interval(t, "gamma_plus_one_quadrature");
    return power_exponential_integral(t, spec);
}

double gamma_cross_check(double t) {
    return std::abs(gamma_plus_one_series(t).value - gamma_plus_one_quadrature(t).value);
}

}  // namespace zerofact
