#pragma once

#include <cstdint>
#include <string_view>

namespace zerofact {

enum class GammaMethod { series_approx, quadrature };

std::string_view to_string(GammaMethod method);

struct GammaResult {
    double value = 0.0;
    double error_estimate = 0.0;
    GammaMethod method = GammaMethod::series_approx;
};

/// Numerical realization of the improper moment integral: integrate on
/// [0, upper_truncation] and bound the rest analytically.
struct QuadratureSpec {
    double upper_truncation = 50.0;
    double abs_tolerance = 1e-12;
    int max_depth = 40;

    /// Throws DomainError when an invariant is broken.
    void validate() const;
};

/// Largest n whose factorial fits in an unsigned 64-bit word.
inline constexpr int kMaxExactFactorial = 20;

/// n! for 0 <= n <= 20. Throws DomainError for n < 0 and OverflowError
/// for n > 20 (use log_factorial instead).
std::uint64_t factorial_int(int n);

/// sum_{k=1}^{n} ln k, summed term by term.
double log_factorial(int n);

/// Gamma(t + 1) on [0, 1] from the Lanczos approximation (g = 7, nine terms).
/// Relative error is below 1e-13 on the whole interval; the reported
/// error_estimate is that bound times the value.
GammaResult gamma_plus_one_series(double t);

/// Gamma(t + 1) on [0, 1] as the integral of x^t e^{-x} over [0, U] by
/// adaptive Gauss-Kronrod, plus the tail bound U^t e^{-U} / (1 - t/U).
/// error_estimate = quadrature estimate + tail bound.
/// Throws ConvergenceError when the depth budget is exhausted first.
GammaResult gamma_plus_one_quadrature(double t, const QuadratureSpec& spec = {});

/// |series - quadrature| at t, with the default quadrature spec.
double gamma_cross_check(double t);

/// Integral of x^p e^{-x} over (0, inf) for 0 <= p <= 170, i.e. Gamma(p + 1)
/// without the [0, 1] restriction. For p > 1 the integrand is scaled by its
/// peak value p^p e^{-p} and the truncation point is pushed past 2p so the
/// tail bound still applies; the tolerance is then relative to that peak.
GammaResult power_exponential_integral(double p, const QuadratureSpec& spec = {});

/// Upper bound on the integral of x^p e^{-x} over [U, inf); requires U > p.
double power_exponential_tail_bound(double p, double upper);

}  // namespace zerofact
