#pragma once

#include <cstdint>
#include <string_view>

#include "zerofact/gamma.hpp"

namespace zerofact {

/// Exponential distribution with rate 1 (mean 1). Fixed; no other rate is modelled.
struct ExponentialModel {
    static constexpr double rate = 1.0;
    static constexpr double mean = 1.0;
};

/// Monte Carlo configuration.
///
/// Sampling contract (bit-reproducible for a fixed seed):
///   engine  std::mt19937_64 seeded with `seed` (sequence fixed by the C++ standard)
///   u_i     ((r_i >> 11) + 0.5) * 2^-53, strictly inside (0, 1)
///   x_i     -log(u_i)
///   value   running mean of pow(x_i, t) (Welford), single shard, in draw order
struct McSpec {
    std::uint64_t sample_count = 1'000'000;
    std::uint64_t seed = 42;

    void validate() const;
};

enum class MomentRoute { quadrature, survival_form, monte_carlo };

std::string_view to_string(MomentRoute route);

struct MomentResult {
    double value = 0.0;
    MomentRoute route = MomentRoute::quadrature;
    double uncertainty = 0.0;  // quadrature error bound or MC standard error
};

/// e^{-x} for x > 0.
double exp_pdf(double x);

/// E[X^t] as the direct moment integral; same numbers as gamma_plus_one_quadrature.
MomentResult moment_quadrature(double t, const QuadratureSpec& spec = {});

/// E[X^t] as the integral of exp(-x^{1/t}) over (0, inf), t in (0, 1].
/// Truncated where x^{1/t} reaches spec.upper_truncation; the remainder is
/// bounded by t U^{t-1} e^{-U}.
MomentResult moment_survival_form(double t, const QuadratureSpec& spec = {});

/// E[X^t] as a sample mean over inverse-CDF exponential draws (see McSpec).
MomentResult moment_monte_carlo(double t, const McSpec& spec = {});

struct MomentCheck {
    bool holds = false;
    double slack = 0.0;
};

/// Jensen for the concave x^t: E[X^t] <= E[X]^t = 1. slack = 1 - E[X^t].
/// Accepts t in [0, 1]; at the endpoints the slack vanishes.
MomentCheck jensen_check(double t);

/// e^{-theta} >= 1 - theta for theta >= 0. slack = e^{-theta} - (1 - theta).
MomentCheck linear_lower_check(double theta);

struct MomentBoundsCheck {
    bool holds = false;
    double lower_bound = 0.0;       // 1/(1+t)
    double moment = 0.0;            // E[X^t]
    double lower_slack = 0.0;       // moment - lower_bound
    double upper_slack = 0.0;       // 1 - moment
    double power_integral = 0.0;    // integral of x^{1/t} over [0, 1] by quadrature
    double power_integral_gap = 0.0;  // |power_integral - t/(1+t)|
};

/// 1/(1+t) <= E[X^t] <= 1 on (0, 1), together with the intermediate
/// identity 1 - integral_0^1 x^{1/t} dx = 1/(1+t) checked to 1e-10.
MomentBoundsCheck moment_bounds_check(double t);

}  // namespace zerofact
