#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstring>
#include <numbers>

#include "oracles.hpp"
#include "peelspiral/convergence.hpp"

using namespace peelspiral;

namespace {

bool bit_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

} // namespace

TEST_CASE("rescaled_euler: origin, oddness and the substitution point") {
    const PlanePoint origin = rescaled_euler(0.0, 4);
    CHECK(origin.x == 0.0);
    CHECK(origin.y == 0.0);

    const PlanePoint pos = rescaled_euler(2.5, 8);
    const PlanePoint neg = rescaled_euler(-2.5, 8);
    CHECK(bit_equal(neg.x, -pos.x));
    CHECK(bit_equal(neg.y, -pos.y));

    // t = sqrt(16 pi) maps to the Euler parameter 1 for N = 4.
    const double scale = std::sqrt(16.0 * std::numbers::pi);
    const PlanePoint p = rescaled_euler(scale, 4);
    CHECK(p.x == Catch::Approx(scale * oracles::kFresnelC1).margin(1e-10));
    CHECK(p.y == Catch::Approx(scale * oracles::kFresnelS1).margin(1e-10));

    CHECK_THROWS_AS(rescaled_euler(1.0, 0), std::invalid_argument);
}

TEST_CASE("rescaled_euler and peel_point agree at the origin exactly") {
    const PeelParams params(4.0);
    const PlanePoint peel = peel_point(0.0, params);
    const PlanePoint euler = rescaled_euler(0.0, 4);
    CHECK(peel.x == euler.x);
    CHECK(peel.y == euler.y);
}

TEST_CASE("error_estimate") {
    CHECK(error_estimate(0.0, 8) == 0.0);
    const double e1 = error_estimate(1.7, 8);
    const double e2 = error_estimate(3.4, 8);
    CHECK(bit_equal(e2, 32.0 * e1));
    CHECK_THROWS_AS(error_estimate(100.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(error_estimate(1.0, 0), std::invalid_argument);
}

TEST_CASE("sup_error: validation") {
    CHECK_THROWS_AS(sup_error(4, 4.0), std::invalid_argument);  // T > sqrt(pi N) ~ 3.54
    CHECK_THROWS_AS(sup_error(4, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(sup_error(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(sup_error(4, 1.0, 5), std::invalid_argument);
    CHECK_THROWS(sup_error(4, 4.0));
    try {
        sup_error(4, 4.0);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("sqrt(pi*N)") != std::string::npos);
    }
}

TEST_CASE("sup_error: monotone in T and decaying in N") {
    const SupError small_t = sup_error(8, 0.5, 101);
    const SupError big_t = sup_error(8, 1.0, 101);
    CHECK(small_t.absolute <= big_t.absolute);

    const SupError n4 = sup_error(4, 1.0, 201);
    const SupError n8 = sup_error(8, 1.0, 201);
    const SupError n16 = sup_error(16, 1.0, 201);
    CHECK(n8.rescaled < n4.rescaled);
    CHECK(n16.rescaled < n8.rescaled);

    // Order-1 decay: quadrupling N divides the rescaled error by ~4.
    const double ratio = n4.rescaled / n16.rescaled;
    CHECK(ratio > 2.0);
    CHECK(ratio < 8.0);
}

TEST_CASE("sup_error: absolute error tracks the leading-term estimate") {
    const SupError e = sup_error(8, 1.0, 201);
    const double estimate = error_estimate(std::sqrt(32.0 * std::numbers::pi), 8);
    CHECK(e.absolute <= 5.0 * estimate);
    CHECK(e.absolute >= 0.05 * estimate);
}

TEST_CASE("sup_error: bounded constant in the theorem regime T = N^0.2 / 4") {
    for (int n : {8, 16, 32, 64}) {
        const double t_rescaled = std::pow(double(n), 0.2) / 4.0;
        const SupError e = sup_error(n, t_rescaled, 101);
        CAPTURE(n);
        CHECK(e.rescaled < 1e-4);  // measured ~1.6e-5, flat across N
    }
}

TEST_CASE("convergence_study: small-T errors are tiny") {
    const ConvergenceReport report = convergence_study({16, 4, 8}, 0.2, 101);
    REQUIRE(report.entries.size() == 3);
    CHECK(report.entries[0].windings == 4);
    CHECK(report.entries[1].windings == 8);
    CHECK(report.entries[2].windings == 16);
    for (const auto& e : report.entries) CHECK(e.sup_error_rescaled < 1e-3);
}

TEST_CASE("convergence_study: slope near -1 for T = 1") {
    const ConvergenceReport report = convergence_study({4, 8, 16}, 1.0, 201);
    CHECK(report.fitted_slope <= -0.8);
    CHECK(report.fitted_slope >= -1.5);
}

TEST_CASE("convergence_study: validation") {
    CHECK_THROWS_AS(convergence_study({4, 8}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(convergence_study({4, 8, 16}, 3.6), std::invalid_argument);  // bound from N=4
}
