#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "zerofact/errors.hpp"
#include "zerofact/gamma.hpp"

using namespace zerofact;

namespace {

// Gamma(1 + t) to 20 digits (mpmath, 30-digit working precision).
struct Reference {
    double t;
    double gamma;
};
constexpr Reference kReferences[] = {
    {0.001, 0.99942377248459546611}, {0.05, 0.9735042655627756432},  {0.1, 0.95135076986687318363},
    {0.2, 0.91816874239976061064},   {0.3, 0.89747069630627718849},  {0.4, 0.88726381750307528922},
    {0.5, 0.88622692545275801365},   {0.6, 0.89351534928769026144},  {0.7, 0.90863873285329044998},
    {0.8, 0.93138377098024269891},   {0.9, 0.96176583190738741941},  {0.999, 0.99957762742372928934},
};

}  // namespace

TEST_CASE("factorial_int matches the iterated-product oracle") {
    CHECK(factorial_int(0) == 1);
    CHECK(factorial_int(1) == 1);
    CHECK(factorial_int(5) == 120);
    CHECK(factorial_int(20) == 2432902008176640000ULL);
    for (int n = 0; n <= kMaxExactFactorial; ++n) {
        CHECK(static_cast<unsigned __int128>(factorial_int(n)) == oracle::exact_factorial(n));
    }
}

TEST_CASE("factorial_int rejects out-of-range input") {
    CHECK_THROWS_AS(factorial_int(-1), DomainError);
    CHECK_THROWS_AS(factorial_int(21), OverflowError);
}

TEST_CASE("log_factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(4.787491743).epsilon(1e-10));
    for (int n = 2; n <= kMaxExactFactorial; ++n) {
        const double exact = std::log(static_cast<double>(oracle::exact_factorial(n)));
        CHECK(std::abs(log_factorial(n) - exact) <= 1e-12 * exact);
    }
    CHECK(std::isfinite(log_factorial(170)));
    CHECK_THROWS_AS(log_factorial(-3), DomainError);
}

TEST_CASE("series evaluator against 20-digit references") {
    CHECK(std::abs(gamma_plus_one_series(0.0).value - 1.0) <= 1e-14);
    CHECK(std::abs(gamma_plus_one_series(1.0).value - 1.0) <= 1e-14);
    CHECK(gamma_plus_one_series(0.5).value == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(1e-13));
    for (const Reference& r : kReferences) {
        const GammaResult g = gamma_plus_one_series(r.t);
        CAPTURE(r.t);
        CHECK(std::abs(g.value - r.gamma) <= 1e-12 * r.gamma);
        CHECK(std::abs(g.value - r.gamma) <= g.error_estimate);
        CHECK(g.method == GammaMethod::series_approx);
    }
}

TEST_CASE("quadrature evaluator against 20-digit references, error estimate is a bound") {
    CHECK(std::abs(gamma_plus_one_quadrature(0.0).value - 1.0) <= 1e-12);
    CHECK(std::abs(gamma_plus_one_quadrature(0.5).value - 0.8862269255) <= 1e-10);
    CHECK(std::abs(gamma_plus_one_quadrature(1.0).value - 1.0) <= 1e-10);
    const QuadratureSpec spec;
    for (const Reference& r : kReferences) {
        const GammaResult g = gamma_plus_one_quadrature(r.t, spec);
        CAPTURE(r.t);
        CHECK(std::abs(g.value - r.gamma) <= g.error_estimate);
        CHECK(g.error_estimate <= spec.abs_tolerance + power_exponential_tail_bound(r.t, spec.upper_truncation));
        CHECK(g.method == GammaMethod::quadrature);
    }
}

TEST_CASE("the test-side Gauss-Legendre oracle agrees with the references") {
    for (const Reference& r : kReferences) {
        CAPTURE(r.t);
        CHECK(std::abs(oracle::gamma_plus_one(r.t) - r.gamma) <= 1e-12);
    }
}

TEST_CASE("tail bound matches the 2 U^t e^{-U} bound when U >= 2t") {
    for (double t : {0.0, 0.3, 1.0}) {
        CHECK(power_exponential_tail_bound(t, 50.0) <= 2.0 * std::pow(50.0, t) * std::exp(-50.0));
    }
    CHECK(power_exponential_tail_bound(1.0, 50.0) < 1e-19);
    CHECK_THROWS_AS(power_exponential_tail_bound(3.0, 2.0), DomainError);
}

TEST_CASE("refining the tolerance 100x moves the value by less than the original estimate") {
    QuadratureSpec coarse;
    coarse.abs_tolerance = 1e-8;
    QuadratureSpec fine = coarse;
    fine.abs_tolerance = 1e-10;
    for (double t : {0.0, 0.05, 0.25, 0.5, 0.75, 1.0}) {
        const GammaResult a = gamma_plus_one_quadrature(t, coarse);
        const GammaResult b = gamma_plus_one_quadrature(t, fine);
        CAPTURE(t);
        CHECK(std::abs(a.value - b.value) < a.error_estimate);
    }
}

TEST_CASE("cross check between evaluators") {
    CHECK(gamma_cross_check(0.0) <= 1e-12);
    CHECK(gamma_cross_check(0.4616) <= 1e-8);
    CHECK(gamma_cross_check(0.9) <= 1e-8);
    for (int i = 0; i <= 1000; i += 7) CHECK(gamma_cross_check(i / 1000.0) <= 1e-8);
}

TEST_CASE("recurrence one unit up: (t+1) Gamma(t+1) equals Gamma(t+2) by direct quadrature") {
    for (int i = 1; i < 20; ++i) {
        const double t = i / 20.0;
        const double lifted = (t + 1.0) * gamma_plus_one_series(t).value;
        const double direct = power_exponential_integral(t + 1.0).value;
        CAPTURE(t);
        CHECK(std::abs(lifted - direct) <= 1e-8);
    }
}

TEST_CASE("endpoint consistency with integer factorials, lifted by recurrence") {
    for (int n : {0, 1}) {
        CHECK(std::abs(gamma_plus_one_series(n).value - 1.0) <= 1e-12);
        CHECK(std::abs(gamma_plus_one_quadrature(n).value - 1.0) <= 1e-12);
    }
    // Gamma(n+1) = n * (n-1) * ... * 2 * Gamma(2)
    for (int n = 2; n <= 10; ++n) {
        double lifted_series = gamma_plus_one_series(1.0).value;
        double lifted_quad = gamma_plus_one_quadrature(1.0).value;
        for (int k = 2; k <= n; ++k) {
            lifted_series *= k;
            lifted_quad *= k;
        }
        const double exact = static_cast<double>(factorial_int(n));
        CHECK(std::abs(lifted_series - exact) <= 1e-12 * exact);
        CHECK(std::abs(lifted_quad - exact) <= 1e-12 * exact);
        CHECK(std::abs(power_exponential_integral(n).value - exact) <= 1e-10 * exact);
    }
}

TEST_CASE("interior minimum by golden section over quadrature values") {
    const auto [tmin, vmin] =
        oracle::golden_min([](double t) { return gamma_plus_one_quadrature(t).value; }, 0.0, 1.0, 1e-7);
    CHECK(std::abs(tmin - 0.461632) <= 1e-4);
    CHECK(std::abs(vmin - 0.885603) <= 1e-6);
    CHECK(std::abs(tmin - 0.46163214496836234) <= 1e-6);
}

TEST_CASE("domain and spec validation") {
    CHECK_THROWS_AS(gamma_plus_one_series(-0.1), DomainError);
    CHECK_THROWS_AS(gamma_plus_one_series(1.1), DomainError);
    CHECK_THROWS_AS(gamma_plus_one_quadrature(1.5), DomainError);
    CHECK_THROWS_AS(gamma_plus_one_series(std::nan("")), DomainError);
    QuadratureSpec bad;
    bad.upper_truncation = 0.5;
    CHECK_THROWS_AS(gamma_plus_one_quadrature(0.5, bad), DomainError);
    bad = {};
    bad.abs_tolerance = 0.0;
    CHECK_THROWS_AS(gamma_plus_one_quadrature(0.5, bad), DomainError);
    bad = {};
    bad.max_depth = 0;
    CHECK_THROWS_AS(gamma_plus_one_quadrature(0.5, bad), DomainError);
}

TEST_CASE("an exhausted refinement budget reports the best value and achieved estimate") {
    QuadratureSpec starved;
    starved.abs_tolerance = 1e-15;
    starved.max_depth = 1;
    try {
        gamma_plus_one_quadrature(0.3, starved);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.achieved_error() > starved.abs_tolerance);
        CHECK(std::abs(e.best_value() - 0.89747069630627718849) <= e.achieved_error());
    }
}

TEST_CASE("evaluators are deterministic") {
    for (double t : {0.0, 0.123, 0.5, 0.987}) {
        CHECK(gamma_plus_one_quadrature(t).value == gamma_plus_one_quadrature(t).value);
        CHECK(gamma_plus_one_series(t).value == gamma_plus_one_series(t).value);
    }
}
