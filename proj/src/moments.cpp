#include "zerofact/moments.hpp"

#include <array>
#include <cmath>
#include <random>
#include <string>

#include "zerofact/bounds.hpp"
#include "zerofact/errors.hpp"
#include "zerofact/quadrature.hpp"

namespace zerofact {

namespace {

constexpr std::uint64_t kMinSamples = 1000;
constexpr double kPowerIdentityTol = 1e-10;
constexpr double kJensenEndpointTol = 1e-12;

void require_closed_unit(double t, const char* who) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError(std::string(who) + ": t must lie in [0, 1]");
}

}  // namespace

void McSpec::validate() const {
    if (sample_count < kMinSamples) throw DomainError("McSpec: sample_count must be at least 1000");
}

std::string_view to_string(MomentRoute route) {
    switch (route) {
        case MomentRoute::quadrature: return "quadrature";
        case MomentRoute::survival_form: return "survival_form";
        case MomentRoute::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

double exp_pdf(double x) {
    if (!(x > 0.0)) throw DomainError("exp_pdf: x must be positive");
    return std::exp(-x);
}

MomentResult moment_quadrature(double t, const QuadratureSpec& spec) {
    require_closed_unit(t, "moment_quadrature");
    const GammaResult g = gamma_plus_one_quadrature(t, spec);
    return {g.value, MomentRoute::quadrature, g.error_estimate};
}

MomentResult moment_survival_form(double t, const QuadratureSpec& spec) {
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("moment_survival_form: t must lie in (0, 1]");
    spec.validate();

    const double inv_t = 1.0 / t;
    const double cutoff = spec.upper_truncation;
    const double upper = std::pow(cutoff, t);
    const std::array<double, 3> breaks{0.0, 1.0, upper};

    const auto integrand = [inv_t](double x) { return std::exp(-std::pow(x, inv_t)); };
    const QuadratureResult q = integrate_adaptive(integrand, breaks, spec.abs_tolerance, spec.max_depth);

    // Substituting y = x^{1/t}: tail = t * int_U^inf y^{t-1} e^{-y} dy <= t U^{t-1} e^{-U}.
    const double tail = t * std::pow(cutoff, t - 1.0) * std::exp(-cutoff);
    if (!q.converged) {
        throw ConvergenceError("moment_survival_form: refinement budget exhausted", q.value, q.error + tail);
    }
    return {q.value, MomentRoute::survival_form, q.error + tail};
}

MomentResult moment_monte_carlo(double t, const McSpec& spec) {
    require_closed_unit(t, "moment_monte_carlo");
    spec.validate();

    std::mt19937_64 engine(spec.seed);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::uint64_t i = 0; i < spec.sample_count; ++i) {
        const double u = (static_cast<double>(engine() >> 11) + 0.5) * 0x1p-53;
        const double y = std::pow(-std::log(u), t);
        const double delta = y - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (y - mean);
    }
    const double n = static_cast<double>(spec.sample_count);
    const double sd = std::sqrt(m2 / (n - 1.0));
    return {mean, MomentRoute::monte_carlo, sd / std::sqrt(n)};
}

MomentCheck jensen_check(double t) {
    require_closed_unit(t, "jensen_check");
    const double moment = moment_quadrature(t).value;
    const double slack = 1.0 - moment;
    return {slack >= -kJensenEndpointTol, slack};
}

MomentCheck linear_lower_check(double theta) {
    if (!(theta >= 0.0)) throw DomainError("linear_lower_check: theta must be non-negative");
    const double slack = std::expm1(-theta) + theta;
    return {slack >= 0.0, slack};
}

MomentBoundsCheck moment_bounds_check(double t) {
    if (!(t > 0.0 && t < 1.0)) throw DomainError("moment_bounds_check: t must lie in (0, 1)");

    MomentBoundsCheck check;
    check.lower_bound = j3_lower(t);
    check.moment = moment_quadrature(t).value;
    check.lower_slack = check.moment - check.lower_bound;
    check.upper_slack = 1.0 - check.moment;

    const double exponent = 1.0 / t;
    const std::array<double, 2> unit{0.0, 1.0};
    const QuadratureResult q = integrate_adaptive([exponent](double x) { return std::pow(x, exponent); }, unit,
                                                  1e-13, 40);
    check.power_integral = q.value;
    check.power_integral_gap = std::abs(q.value - t / (1.0 + t));

    check.holds = check.lower_slack >= 0.0 && check.upper_slack >= 0.0 && q.converged &&
                  check.power_integral_gap <= kPowerIdentityTol;
    return check;
}

}  // namespace zerofact
