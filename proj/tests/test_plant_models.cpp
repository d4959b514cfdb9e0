#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lfc/errors.hpp"
#include "lfc/plant.hpp"
#include "lfc/sim.hpp"

#include <cmath>
#include <vector>

using namespace lfc;

namespace {

std::vector<double> naive_conv(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void check_tf(const TransferFunction& g, const std::vector<double>& num,
              const std::vector<double>& den, double tol = 1e-12) {
    const TransferFunction expected{Polynomial(num), Polynomial(den)};
    REQUIRE(g.num().coeffs().size() == expected.num().coeffs().size());
    REQUIRE(g.den().coeffs().size() == expected.den().coeffs().size());
    for (std::size_t i = 0; i < expected.num().coeffs().size(); ++i) {
        CHECK(g.num().coeffs()[i] == doctest::Approx(expected.num().coeffs()[i]).epsilon(tol));
    }
    for (std::size_t i = 0; i < expected.den().coeffs().size(); ++i) {
        CHECK(g.den().coeffs()[i] == doctest::Approx(expected.den().coeffs()[i]).epsilon(tol));
    }
}

// Routh condition for degree <= 2: every denominator coefficient positive.
bool low_order_stable(const TransferFunction& g) {
    if (g.den().degree() > 2) return false;
    for (double c : g.den().coeffs()) {
        if (!(c > 0.0)) return false;
    }
    return true;
}

} // namespace

TEST_CASE("generator block is 1/(2Hs + D)") {
    check_tf(generator_tf({5.0, 0.8}), {1.0}, {0.8, 10.0});
    // undamped load leaves a pure integrator
    const TransferFunction undamped = generator_tf({5.0, 0.0});
    check_tf(undamped, {1.0}, {0.0, 10.0});
    CHECK_THROWS_AS(dc_gain(undamped), PoleAtOriginError);
    CHECK(dc_gain(generator_tf({5.0, 0.8})) == doctest::Approx(1.25).epsilon(1e-12));
    CHECK_THROWS_AS(generator_tf({0.0, 0.8}), std::invalid_argument);
    CHECK_THROWS_AS(generator_tf({5.0, -0.1}), std::invalid_argument);
}

TEST_CASE("generator dc gain is 1/D whenever D > 0") {
    for (double d : {0.5, 0.8, 1.0, 2.0}) {
        CHECK(dc_gain(generator_tf({5.0, d})) == doctest::Approx(1.0 / d).epsilon(1e-12));
    }
}

TEST_CASE("governor block is a unit-dc first-order lag") {
    check_tf(governor_tf({0.2, 0.05}), {1.0}, {1.0, 0.2});
    for (double tau : {0.08, 0.2, 0.5}) {
        CHECK(dc_gain(governor_tf({tau, 0.05})) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(governor_tf({-0.2, 0.05}), std::invalid_argument);
    CHECK_THROWS_AS(governor_tf({0.2, 0.0}), std::invalid_argument);
}

TEST_CASE("governor step response follows the analytic first-order rise") {
    const SimResult res = step_response(governor_tf({0.2, 0.05}), SimConfig{0.001, 1.0, 1});
    const int idx = static_cast<int>(std::llround(0.2 / 0.001));
    CHECK(res.series[0][static_cast<std::size_t>(idx)] ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-7));
}

TEST_CASE("thermal turbine block and its governor cascade") {
    check_tf(thermal_turbine_tf({0.5}), {1.0}, {1.0, 0.5});
    CHECK(dc_gain(thermal_turbine_tf({0.5})) == doctest::Approx(1.0).epsilon(1e-12));

    const TransferFunction cascade =
        series(governor_tf({0.2, 0.05}), thermal_turbine_tf({0.5}));
    const std::vector<double> oracle = naive_conv({1.0, 0.2}, {1.0, 0.5});
    check_tf(cascade, {1.0}, oracle);
    check_tf(cascade, {1.0}, {1.0, 0.7, 0.1});
    CHECK_THROWS_AS(thermal_turbine_tf({0.0}), std::invalid_argument);
}

TEST_CASE("hydro turbine is non-minimum phase with unit dc gain") {
    check_tf(hydro_turbine_tf({.T_w = 1.0}), {1.0, -1.0}, {1.0, 0.5});
    for (double tw : {0.5, 1.0, 2.0, 4.0}) {
        const TransferFunction g = hydro_turbine_tf({.T_w = tw});
        CHECK(dc_gain(g) == doctest::Approx(1.0).epsilon(1e-12));
        // exactly one zero, in the right half-plane at s = +1/T_w
        REQUIRE(g.num().degree() == 1);
        const double zero = -g.num().coeffs()[0] / g.num().coeffs()[1];
        CHECK(zero == doctest::Approx(1.0 / tw).epsilon(1e-12));
        CHECK(zero > 0.0);
    }
    CHECK_THROWS_AS(hydro_turbine_tf({.T_w = 0.0}), std::invalid_argument);
}

TEST_CASE("hydro turbine step response starts inverted at -2x the final value") {
    const SimConfig cfg{0.01, 10.0, 1};
    const SimResult res = step_response(hydro_turbine_tf({.T_w = 1.0}), cfg);
    CHECK(res.series[0][1] < 0.0);
    // initial-value theorem: lim_{s->inf} G = -T_w/(0.5 T_w) = -2
    const double extrapolated = 2.0 * res.series[0][1] - res.series[0][2];
    CHECK(extrapolated == doctest::Approx(-2.0).epsilon(0.01));
    CHECK(res.series[0].back() == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("hydro governor with and without transient droop compensation") {
    const GovernorParams gov{0.2, 0.05};
    HydroTurbineParams hyd{1.0, true, 0.38, 5.0};

    check_tf(hydro_governor_tf(gov, hyd, false), {1.0}, {1.0, 0.2});

    // (5s+1)/((0.2s+1)(38s+1)): R_t/R * T_r = 0.38/0.05 * 5 = 38
    const std::vector<double> den_oracle = naive_conv({1.0, 0.2}, {1.0, 38.0});
    check_tf(hydro_governor_tf(gov, hyd, true), {1.0, 5.0}, den_oracle);
    check_tf(hydro_governor_tf(gov, hyd, true), {1.0, 5.0}, {1.0, 38.2, 7.6});
    CHECK(dc_gain(hydro_governor_tf(gov, hyd, true)) == doctest::Approx(1.0).epsilon(1e-12));

    HydroTurbineParams missing{1.0, true, std::nullopt, std::nullopt};
    CHECK_THROWS_AS(hydro_governor_tf(gov, missing, true), MissingCompensationParams);
    HydroTurbineParams bad_rt{1.0, true, 0.04, 5.0}; // R_t <= R
    CHECK_THROWS_AS(hydro_governor_tf(gov, bad_rt, true), std::invalid_argument);
}

TEST_CASE("all low-order plant blocks with damping are stable by Routh") {
    CHECK(low_order_stable(generator_tf({5.0, 0.8})));
    CHECK(low_order_stable(governor_tf({0.2, 0.05})));
    CHECK(low_order_stable(thermal_turbine_tf({0.5})));
    CHECK(low_order_stable(hydro_turbine_tf({.T_w = 1.0})));
    CHECK(low_order_stable(series(governor_tf({0.2, 0.05}), thermal_turbine_tf({0.5}))));
    CHECK(low_order_stable(hydro_governor_tf({0.2, 0.05}, {1.0, true, 0.38, 5.0}, true)));
}
