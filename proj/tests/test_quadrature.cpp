#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "zerofact/quadrature.hpp"

using namespace zerofact;

TEST_CASE("polynomials up to degree 22 are exact on one panel") {
    const std::array<double, 2> unit{0.0, 1.0};
    for (int degree : {0, 1, 5, 14, 22}) {
        const auto q = integrate_adaptive([degree](double x) { return std::pow(x, degree); }, unit, 1e-13, 0);
        CAPTURE(degree);
        CHECK(q.value == doctest::Approx(1.0 / (degree + 1)).epsilon(1e-14));
    }
}

TEST_CASE("power singularity at the left endpoint is refined away") {
    const std::array<double, 2> unit{0.0, 1.0};
    for (double p : {-0.5, 0.1, 0.5}) {
        const auto q = integrate_adaptive([p](double x) { return std::pow(x, p); }, unit, 1e-12, 100);
        CAPTURE(p);
        CHECK(q.converged);
        CHECK(std::abs(q.value - 1.0 / (p + 1.0)) <= q.error);
        CHECK(q.error <= 1e-12);
    }
}

TEST_CASE("breakpoints split the domain and results add up") {
    const std::array<double, 4> pts{0.0, 0.5, 2.0, 3.0};
    const auto q = integrate_adaptive([](double x) { return std::exp(-x); }, pts, 1e-13, 30);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0 - std::exp(-3.0)).epsilon(1e-14));
    CHECK(q.panels >= 3);
}

TEST_CASE("unreachable tolerances give up early") {
    const std::array<double, 2> unit{0.0, 1.0};
    // below the roundoff floor of about 50 eps * integral |f|
    const auto floor = integrate_adaptive([](double x) { return std::exp(-x); }, unit, 1e-16, 30);
    CHECK_FALSE(floor.converged);
    CHECK(floor.panels < 10);
    // x^{-1/2} needs roughly 80 bisections toward 0 for 1e-12
    const auto frozen = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, unit, 1e-12, 40);
    CHECK_FALSE(frozen.converged);
    CHECK(frozen.panels < 100);
    CHECK(std::abs(frozen.value - 2.0) <= frozen.error);
}

TEST_CASE("invalid partitions are rejected") {
    const auto f = [](double) { return 1.0; };
    CHECK_THROWS_AS(integrate_adaptive(f, std::array<double, 1>{0.0}, 1e-10, 5), std::invalid_argument);
    CHECK_THROWS_AS(integrate_adaptive(f, std::array<double, 2>{1.0, 0.0}, 1e-10, 5), std::invalid_argument);
    CHECK_THROWS_AS(integrate_adaptive(f, std::array<double, 2>{0.0, 1.0}, 0.0, 5), std::invalid_argument);
}

TEST_CASE("a starved depth budget comes back unconverged") {
    const std::array<double, 2> unit{0.0, 1.0};
    const auto q = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, unit, 1e-14, 2);
    CHECK_FALSE(q.converged);
    CHECK(q.error > 1e-14);
}
