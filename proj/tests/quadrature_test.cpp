#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <cstring>
#include <limits>
#include <random>

#include "oracles.hpp"
#include "peelspiral/quadrature.hpp"

using namespace peelspiral;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

bool bit_equal(std::complex<double> a, std::complex<double> b) {
    return bit_equal(a.real(), b.real()) && bit_equal(a.imag(), b.imag());
}

} // namespace

TEST_CASE("integrate: constant integrand") {
    const auto r = integrate([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(r.value == Catch::Approx(1.0).margin(1e-10));
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.subdivisions_used == 0);
}

TEST_CASE("integrate: sine over a half period") {
    const auto r = integrate([](double u) { return std::sin(u); }, 0.0, std::numbers::pi);
    CHECK(r.value == Catch::Approx(2.0).margin(1e-10));
}

TEST_CASE("integrate: cos(u^2) against the series oracle") {
    const double expected = oracles::maclaurin_fresnel_c(1.0);
    CHECK(expected == Catch::Approx(oracles::kFresnelC1).margin(1e-15));

    const auto r = integrate([](double u) { return std::cos(u * u); }, 0.0, 1.0);
    CHECK(r.value == Catch::Approx(expected).margin(1e-10));
}

TEST_CASE("integrate: empty interval") {
    const auto r = integrate([](double u) { return std::exp(u); }, 2.0, 2.0);
    CHECK(r.value == 0.0);
    CHECK(r.error_estimate == 0.0);
}

TEST_CASE("integrate_oscillatory: zero phase") {
    const auto r = integrate_oscillatory([](double) { return 0.0; }, [](double) { return 0.0; },
                                         0.0, 1.0);
    CHECK(r.value.real() == Catch::Approx(1.0).margin(1e-10));
    CHECK(r.value.imag() == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("integrate_oscillatory: quadratic phase agrees with direct integration") {
    const auto osc = integrate_oscillatory([](double u) { return u * u; },
                                           [](double u) { return 2.0 * u; }, 0.0, 10.0);
    const auto direct = integrate(
        [](double u) { return std::exp(std::complex<double>(0.0, u * u)); }, 0.0, 10.0);
    CHECK(std::abs(osc.value - direct.value) <=
          3.0 * (osc.error_estimate + direct.error_estimate) + 1e-12);
}

TEST_CASE("integrate_oscillatory: peel phase with a steep end agrees with direct integration") {
    const double a = 2.0 * std::numbers::pi;
    auto phase = [a](double u) { return -std::sqrt(std::max((a - u) * (a + u), 0.0)); };
    auto rate = [a](double u) { return u / std::sqrt(std::max((a - u) * (a + u), 0.0)); };
    const double hi = a - 1e-6;

    const auto osc = integrate_oscillatory(phase, rate, 0.0, hi);
    const auto direct = integrate(
        [&](double u) { return std::exp(std::complex<double>(0.0, phase(u))); }, 0.0, hi);
    CHECK(std::abs(osc.value - direct.value) <=
          3.0 * (osc.error_estimate + direct.error_estimate) + 1e-12);
}

TEST_CASE("integrate: additivity across a split point") {
    auto f = [](double u) { return std::exp(-u * u) * std::cos(3.0 * u); };
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> pick(-4.0, 4.0);
    for (int trial = 0; trial < 20; ++trial) {
        double a = pick(rng), b = pick(rng), c = pick(rng);
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        const auto left = integrate(f, a, b);
        const auto right = integrate(f, b, c);
        const auto whole = integrate(f, a, c);
        const double tolerance =
            3.0 * (left.error_estimate + right.error_estimate + whole.error_estimate) + 1e-14;
        CHECK(std::abs(left.value + right.value - whole.value) <= tolerance);
    }
}

TEST_CASE("integrate: repeated calls are bit-identical") {
    auto f = [](double u) { return std::cos(u * u) / (1.0 + u); };
    const auto r1 = integrate(f, 0.0, 9.0);
    const auto r2 = integrate(f, 0.0, 9.0);
    CHECK(bit_equal(r1.value, r2.value));
    CHECK(bit_equal(r1.error_estimate, r2.error_estimate));
    CHECK(r1.subdivisions_used == r2.subdivisions_used);

    const auto o1 = integrate_oscillatory([](double u) { return u * u; },
                                          [](double u) { return 2.0 * u; }, 0.0, 12.0);
    const auto o2 = integrate_oscillatory([](double u) { return u * u; },
                                          [](double u) { return 2.0 * u; }, 0.0, 12.0);
    CHECK(bit_equal(o1.value, o2.value));
}

TEST_CASE("integrate: non-finite sample is reported with its abscissa") {
    auto f = [](double u) { return u > 0.3 ? std::numeric_limits<double>::quiet_NaN() : 1.0; };
    try {
        integrate(f, 0.0, 1.0);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.kind() == QuadratureError::Kind::non_finite_sample);
        CHECK(e.sample_point() > 0.3);
        CHECK(e.sample_point() <= 1.0);
    }
}

TEST_CASE("integrate: non-convergence carries the best estimate") {
    QuadratureSpec tight{1e-15, 0.0, 3};
    auto f = [](double u) { return std::cos(50.0 * u * u); };
    try {
        integrate(f, 0.0, 10.0, tight);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.kind() == QuadratureError::Kind::non_convergence);
        CHECK(std::isfinite(e.best_estimate().real()));
        CHECK(e.error_bound() > 0.0);
    }
}

TEST_CASE("integrate: argument validation") {
    auto f = [](double u) { return u; };
    CHECK_THROWS_AS(integrate(f, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, QuadratureSpec{0.0, 1e-10, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, QuadratureSpec{1e-10, -1.0, 100}),
                    std::invalid_argument);
    CHECK_THROWS_AS(integrate(f, 0.0, 1.0, QuadratureSpec{1e-10, 1e-10, 0}),
                    std::invalid_argument);
}

TEST_CASE("integrate: subdivision budget is respected and reported") {
    const auto r = integrate([](double u) { return std::cos(u * u); }, 0.0, 20.0);
    CHECK(r.subdivisions_used >= 1);
    CHECK(r.subdivisions_used <= QuadratureSpec{}.max_subdivisions);
}
