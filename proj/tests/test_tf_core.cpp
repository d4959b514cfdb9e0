#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lfc/errors.hpp"
#include "lfc/polynomial.hpp"
#include "lfc/sim.hpp"
#include "lfc/state_space.hpp"
#include "lfc/transfer_function.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace lfc;

namespace {

// Independent brute-force convolution, kept free of Polynomial internals.
std::vector<double> naive_conv(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

void check_close(const Polynomial& p, const std::vector<double>& expected, double tol = 1e-12) {
    REQUIRE(p.coeffs().size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(p.coeffs()[i] == doctest::Approx(expected[i]).epsilon(tol));
    }
}

void check_tf_close(const TransferFunction& g, const TransferFunction& h, double tol = 1e-12) {
    REQUIRE(g.num().coeffs().size() == h.num().coeffs().size());
    REQUIRE(g.den().coeffs().size() == h.den().coeffs().size());
    for (std::size_t i = 0; i < g.num().coeffs().size(); ++i) {
        CHECK(g.num().coeffs()[i] == doctest::Approx(h.num().coeffs()[i]).epsilon(tol));
    }
    for (std::size_t i = 0; i < g.den().coeffs().size(); ++i) {
        CHECK(g.den().coeffs()[i] == doctest::Approx(h.den().coeffs()[i]).epsilon(tol));
    }
}

TransferFunction random_proper_tf(std::mt19937& rng, bool nonzero_dc = false) {
    std::uniform_int_distribution<int> deg_dist(0, 5);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> lead(0.5, 2.0);
    for (;;) {
        const int dn = deg_dist(rng);
        std::uniform_int_distribution<int> num_deg_dist(0, dn);
        const int nn = num_deg_dist(rng);
        std::vector<double> den(static_cast<std::size_t>(dn) + 1);
        std::vector<double> num(static_cast<std::size_t>(nn) + 1);
        for (auto& c : den) c = coeff(rng);
        for (auto& c : num) c = coeff(rng);
        den.back() = lead(rng);
        if (num.back() == 0.0) num.back() = 1.0;
        if (nonzero_dc && std::fabs(den.front()) < 0.1) continue;
        return TransferFunction(Polynomial(num), Polynomial(den));
    }
}

} // namespace

TEST_CASE("polynomial canonical form") {
    CHECK(Polynomial({0.0, 0.0}).is_zero());
    CHECK(Polynomial({1.0, 2.0, 0.0}).degree() == 1);
    CHECK(Polynomial({5.0}).degree() == 0);
    // relative trim: residue far below the dominant coefficient vanishes
    const Polynomial residue({1.0, 1e-15, 0.0, 1e-20});
    CHECK(residue.degree() == 0);
    CHECK(residue.coeffs()[0] == 1.0);
    // trimming is relative, not absolute
    const Polynomial small({1e-18, 2e-18});
    CHECK(small.degree() == 1);
    CHECK_THROWS_AS(Polynomial(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("poly_mul matches hand expansion and identity") {
    // (s+1)(s+2) = s^2 + 3s + 2
    check_close(Polynomial({1.0, 1.0}) * Polynomial({2.0, 1.0}), {2.0, 3.0, 1.0});
    // p * 1 = p
    const Polynomial p({0.4, -1.0, 3.0});
    CHECK(p * Polynomial::one() == p);
    // generator denominator times 2s, against the brute-force oracle
    const std::vector<double> a{0.0, 2.0};
    const std::vector<double> b{0.8, 10.0};
    check_close(Polynomial(a) * Polynomial(b), naive_conv(a, b));
    check_close(Polynomial(a) * Polynomial(b), {0.0, 1.6, 20.0});
}

TEST_CASE("series composes cascades") {
    const TransferFunction g1(Polynomial({1.0}), Polynomial({1.0, 1.0}));
    const TransferFunction g2(Polynomial({1.0}), Polynomial({2.0, 1.0}));
    check_tf_close(series(g1, g2),
                   TransferFunction(Polynomial({1.0}), Polynomial({2.0, 3.0, 1.0})));
    check_tf_close(series(g1, TransferFunction::constant(1.0)), g1);

    // governor * turbine * generator cascade; the expansion oracle gives
    // (0.2s+1)(0.5s+1)(10s+0.8) = s^3 + 7.08 s^2 + 10.56 s + 0.8
    const TransferFunction gov(Polynomial({1.0}), Polynomial({1.0, 0.2}));
    const TransferFunction turb(Polynomial({1.0}), Polynomial({1.0, 0.5}));
    const TransferFunction gen(Polynomial({1.0}), Polynomial({0.8, 10.0}));
    const TransferFunction cascade = series(series(gov, turb), gen);
    const std::vector<double> oracle =
        naive_conv(naive_conv({1.0, 0.2}, {1.0, 0.5}), {0.8, 10.0});
    REQUIRE(oracle.size() == 4);
    CHECK(oracle[3] == doctest::Approx(1.0)); // already monic
    check_close(cascade.den(), {oracle[0], oracle[1], oracle[2], oracle[3]});
    check_close(cascade.den(), {0.8, 10.56, 7.08, 1.0});
    check_close(cascade.num(), {1.0});
}

TEST_CASE("parallel forms summing junctions") {
    const TransferFunction g(Polynomial({2.0}), Polynomial({1.0, 3.0}));
    check_tf_close(parallel(g, TransferFunction::constant(0.0)), g);
    // 1/s + 1 = (s+1)/s
    const TransferFunction integ(Polynomial({1.0}), Polynomial({0.0, 1.0}));
    check_tf_close(parallel(integ, TransferFunction::constant(1.0)),
                   TransferFunction(Polynomial({1.0, 1.0}), Polynomial({0.0, 1.0})));
    // PI form Kp + Ki/s = (Kp s + Ki)/s
    const TransferFunction pi =
        parallel(TransferFunction::constant(0.5),
                 TransferFunction(Polynomial({7.0}), Polynomial({0.0, 1.0})));
    check_tf_close(pi, TransferFunction(Polynomial({7.0, 0.5}), Polynomial({0.0, 1.0})));
}

TEST_CASE("feedback closes loops") {
    const TransferFunction integ(Polynomial({1.0}), Polynomial({0.0, 1.0}));
    check_tf_close(feedback(integ, TransferFunction::constant(1.0)),
                   TransferFunction(Polynomial({1.0}), Polynomial({1.0, 1.0})));

    const TransferFunction g(Polynomial({2.0}), Polynomial({1.0, 1.0, 0.5}));
    check_tf_close(feedback(g, TransferFunction::constant(0.0)), g);

    // droop loop closed around the single-area cascade: the closed-loop
    // denominator gains 1/R = 20 on its constant term only
    const TransferFunction cascade(Polynomial({1.0}),
                                   Polynomial({0.8, 10.56, 7.08, 1.0}));
    const TransferFunction closed = feedback(cascade, TransferFunction::constant(20.0));
    check_close(closed.den(), {20.8, 10.56, 7.08, 1.0});
    check_close(closed.num(), {1.0});
    CHECK(dc_gain(closed) == doctest::Approx(1.0 / 20.8).epsilon(1e-12));

    CHECK_THROWS_AS(feedback(TransferFunction::constant(1.0),
                             TransferFunction::constant(-1.0)),
                    AlgebraicLoopError);
}

TEST_CASE("dc_gain evaluates finals and flags integrators") {
    CHECK(dc_gain(TransferFunction(Polynomial({1.0}), Polynomial({0.8, 10.0}))) ==
          doctest::Approx(1.25).epsilon(1e-12));
    CHECK(dc_gain(TransferFunction(Polynomial({1.0, -1.0}), Polynomial({1.0, 0.5}))) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // closed-loop df per -dPL with D = 0.8, R = 0.05: 1/(D + 1/R)
    CHECK(1.0 / 20.8 == doctest::Approx(0.0480769230769).epsilon(1e-10));
    CHECK_THROWS_AS(dc_gain(TransferFunction(Polynomial({1.0}), Polynomial({0.0, 1.0}))),
                    PoleAtOriginError);
}

TEST_CASE("to_state_space produces controllable canonical form") {
    const StateSpace first = to_state_space(
        TransferFunction(Polynomial({1.0}), Polynomial({1.0, 1.0})));
    CHECK(first.A(0, 0) == -1.0);
    CHECK(first.B(0, 0) == 1.0);
    CHECK(first.C(0, 0) == 1.0);
    CHECK(first.D(0, 0) == 0.0);

    const StateSpace second = to_state_space(
        TransferFunction(Polynomial({1.0}), Polynomial({2.0, 3.0, 1.0})));
    CHECK(second.A(0, 0) == 0.0);
    CHECK(second.A(0, 1) == 1.0);
    CHECK(second.A(1, 0) == -2.0);
    CHECK(second.A(1, 1) == -3.0);
    CHECK(second.B(0, 0) == 0.0);
    CHECK(second.B(1, 0) == 1.0);
    CHECK(second.C(0, 0) == 1.0);
    CHECK(second.C(0, 1) == 0.0);
    CHECK(second.D(0, 0) == 0.0);

    // hydro block (-s+1)/(0.5s+1) normalizes to (-2s+2)/(s+2)
    const StateSpace hydro = to_state_space(
        TransferFunction(Polynomial({1.0, -1.0}), Polynomial({1.0, 0.5})));
    CHECK(hydro.A(0, 0) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(hydro.D(0, 0) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(hydro.C(0, 0) == doctest::Approx(6.0).epsilon(1e-15));

    // static gain has an empty state block
    const StateSpace gain = to_state_space(TransferFunction::constant(3.5));
    CHECK(gain.order() == 0);
    CHECK(gain.D(0, 0) == doctest::Approx(3.5));
}

TEST_CASE("hydro realization step response matches the partial-fraction solution") {
    // (-2s+2)/(s+2) under a unit step: y(t) = 1 - 3 e^{-2t}
    const TransferFunction hydro(Polynomial({1.0, -1.0}), Polynomial({1.0, 0.5}));
    const SimResult res = step_response(hydro, SimConfig{0.001, 5.0, 1});
    for (std::size_t k = 0; k < res.time.size(); k += 100) {
        const double t = res.time[k];
        const double expected = 1.0 - 3.0 * std::exp(-2.0 * t);
        CHECK(res.series[0][k] == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("interconnections preserve properness (random blocks)") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        const TransferFunction a = random_proper_tf(rng);
        const TransferFunction b = random_proper_tf(rng);
        const int sign = trial % 2 ? +1 : -1;

        const TransferFunction s = series(a, b);
        CHECK(s.num().degree() <= s.den().degree());
        const TransferFunction p = parallel(a, b, sign);
        CHECK(p.num().degree() <= p.den().degree());
        try {
            const TransferFunction f = feedback(a, b, sign);
            CHECK(f.num().degree() <= f.den().degree());
        } catch (const AlgebraicLoopError&) {
            // legitimate for exactly-cancelling loops
        }
    }
}

TEST_CASE("series is associative and commutative up to canonical form") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 100; ++trial) {
        const TransferFunction a = random_proper_tf(rng);
        const TransferFunction b = random_proper_tf(rng);
        const TransferFunction c = random_proper_tf(rng);
        check_tf_close(series(series(a, b), c), series(a, series(b, c)), 1e-9);
        check_tf_close(series(a, b), series(b, a), 1e-9);
    }
}

TEST_CASE("dc gain of a droop-style feedback loop follows g0/(1 + k g0)") {
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> gain(0.1, 5.0);
    int checked = 0;
    while (checked < 100) {
        const TransferFunction g = random_proper_tf(rng, /*nonzero_dc=*/true);
        const double g0 = dc_gain(g);
        const double k = gain(rng);
        if (std::fabs(1.0 + k * g0) < 0.1) continue;
        const TransferFunction closed = feedback(g, TransferFunction::constant(k));
        CHECK(dc_gain(closed) == doctest::Approx(g0 / (1.0 + k * g0)).epsilon(1e-12));
        ++checked;
    }
}

TEST_CASE("realization fidelity against partial fractions (random stable TFs)") {
    // distinct real poles keep the analytic step response a plain
    // exponential sum: y(t) = r0 + sum_i ri e^{pi t}
    std::mt19937 rng(90210);
    std::uniform_real_distribution<double> pole_gap(0.3, 1.2);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_int_distribution<int> order(1, 4);

    for (int trial = 0; trial < 25; ++trial) {
        const int n = order(rng);
        std::vector<double> poles;
        double p = -pole_gap(rng);
        for (int i = 0; i < n; ++i) {
            poles.push_back(p);
            p -= pole_gap(rng);
        }
        Polynomial den = Polynomial::one();
        for (double pi : poles) den = den * Polynomial({-pi, 1.0});
        std::vector<double> num_c(static_cast<std::size_t>(n), 0.0);
        for (auto& c : num_c) c = coeff(rng);
        if (num_c.back() == 0.0) num_c.back() = 1.0;
        const TransferFunction g(Polynomial(num_c), den);

        auto num_at = [&](double s) { return g.num().eval(s); };
        auto den_at = [&](double s) { return g.den().eval(s); };
        const double r0 = num_at(0.0) / den_at(0.0);
        std::vector<double> residues;
        for (double pi : poles) {
            double prod = pi; // the 1/s factor of the step input
            for (double pj : poles) {
                if (pj != pi) prod *= (pi - pj);
            }
            residues.push_back(num_at(pi) / prod);
        }

        const SimResult res = step_response(g, SimConfig{0.001, 4.0, 10});
        for (std::size_t k = 0; k < res.time.size(); ++k) {
            const double t = res.time[k];
            double expected = r0;
            for (int i = 0; i < n; ++i) {
                expected += residues[static_cast<std::size_t>(i)] *
                            std::exp(poles[static_cast<std::size_t>(i)] * t);
            }
            CHECK(res.series[0][k] == doctest::Approx(expected).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        const TransferFunction g = random_proper_tf(rng);
        const TransferFunction again(g.num(), g.den());
        CHECK(again == g);
    }
}

TEST_CASE("transfer function constructor rejects degenerate input") {
    CHECK_THROWS_AS(TransferFunction(Polynomial({1.0}), Polynomial::zero()),
                    std::invalid_argument);
    CHECK_THROWS_AS(TransferFunction(Polynomial({1.0, 2.0}), Polynomial({1.0})),
                    std::invalid_argument);
}
