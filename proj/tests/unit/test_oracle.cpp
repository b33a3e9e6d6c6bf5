#include <doctest.h>

#include <algorithm>

#include "omfwm/errors.hpp"
#include "omfwm/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace omfwm;

TEST_SUITE("oracle") {

TEST_CASE("matrix coefficients reproduce the closed forms at gain-figure parameters") {
    const auto p = test::gain_figure(29900.0);
    const auto c = mechanical_response(p).delta_m_eff;
    for (double w : {-c, -c + 10.0, 0.0, c, 3.0 * p.kappa}) {
        const auto t = oracle::transfer_matrix(w, p);
        const auto m = oracle::coefficients_from_matrix(t, p);
        const auto f = coefficients(w, p);
        const double floor = 1e-6 * std::max(std::abs(f.A), std::abs(f.N));
        CHECK(oracle::relative_error(m.A, f.A, floor) < 1e-12);
        CHECK(oracle::relative_error(m.B, f.B, floor) < 1e-12);
        CHECK(oracle::relative_error(m.C, f.C, floor) < 1e-12);
        CHECK(oracle::relative_error(m.D, f.D, floor) < 1e-12);
        CHECK(oracle::relative_error(m.M, f.M, floor) < 1e-12);
        CHECK(oracle::relative_error(m.N, f.N, floor) < 1e-12);
        CHECK(oracle::relative_error(m.P, f.P, floor) < 1e-12);
        CHECK(oracle::relative_error(m.Q, f.Q, floor) < 1e-12);
    }
}

TEST_CASE("noise correlator") {
    const auto k = oracle::noise_correlator(3.0);
    CHECK(k(oracle::a_in, oracle::a_in_dag) == cplx(1.0));
    CHECK(k(oracle::a_in_dag, oracle::a_in) == cplx(0.0));
    CHECK(k(oracle::a_v, oracle::a_v_dag) == cplx(1.0));
    CHECK(k(oracle::eta, oracle::eta_dag) == cplx(4.0));
    CHECK(k(oracle::eta_dag, oracle::eta) == cplx(3.0));
    CHECK(k(oracle::a_in, oracle::a_in) == cplx(0.0));
}

TEST_CASE("passive bare cavity: the reflection is unitary") {
    for (double escape : {0.5, 0.8, 1.0}) {
        auto p = test::bare_cavity(escape);
        const auto t = oracle::transfer_matrix(1234.0, p);
        const auto rows = oracle::output_rows(t, p);
        // Commutator [a_r, a_r^dag] = 1 summed over all ports.
        double sum = 0.0;
        sum += std::norm(rows.field(oracle::a_in));
        sum += std::norm(rows.field(oracle::a_v));
        sum += std::norm(rows.field(oracle::eta));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("output commutator is preserved with gain") {
    test::StableParamGenerator gen(1111);
    for (int i = 0; i < 50; ++i) {
        const auto p = gen.next();
        for (double w : gen.frequencies(p, 5)) {
            const auto t = oracle::transfer_matrix(w, p);
            const auto r = oracle::output_rows(t, p);
            const double c = std::norm(r.field(oracle::a_in)) + std::norm(r.field(oracle::a_v)) +
                             std::norm(r.field(oracle::eta)) -
                             std::norm(r.field(oracle::a_in_dag)) -
                             std::norm(r.field(oracle::a_v_dag)) -
                             std::norm(r.field(oracle::eta_dag));
            const double scale = std::norm(r.field(oracle::a_in)) + std::norm(r.field(oracle::eta)) + 1.0;
            CHECK(std::abs(c - 1.0) < 1e-9 * scale);
        }
    }
}

TEST_CASE("comparison passes for the gain and entanglement figures") {
    const auto grid = FrequencyGrid::linspace(-2e4, 2e4, 11);
    for (const auto& p : {test::gain_figure(29900.0), test::entanglement_figure(0.95, 1.0),
                          test::entanglement_figure(0.95, 298.0, 1.8e5)}) {
        const auto r = oracle::compare(p, grid, 1e-9);
        CHECK(r.passed);
        CHECK(r.max_error < 1e-9);
        CHECK(r.points.size() == grid.size());
    }
}

TEST_CASE("comparison near the stability edge still passes") {
    auto p = test::gain_figure(3e4);
    p.g_plus = 0.999 * stability_margin(p).g_plus_max;
    const double c = mechanical_response(p).delta_m_eff;
    const auto grid = FrequencyGrid::linspace(-c - 5.0, -c + 5.0, 11);
    const auto r = oracle::compare(p, grid, 1e-9);
    CHECK(r.passed);
}

TEST_CASE("a flipped Fourier convention is caught") {
    const auto p = test::gain_figure(29900.0);
    const auto grid = FrequencyGrid::linspace(-2e5, 2e5, 9);
    const auto r = oracle::compare(p, grid, 1e-9, Convention::printed);
    CHECK_FALSE(r.passed);
    CHECK(r.max_error > 1e-3);
    CHECK_FALSE(r.deviations.empty());
}

TEST_CASE("literal thermal-pairing deviations are itemized") {
    const auto p = test::entanglement_figure(0.95, 1.0);
    const auto grid = FrequencyGrid::linspace(-1e4, 1e4, 5);
    const auto r = oracle::compare(p, grid, 1e-9);
    CHECK(r.passed);
    CHECK(r.max_printed_appendix_error > 1e-3);
    bool mentioned = false;
    for (const auto& d : r.deviations) mentioned = mentioned || d.find("printed") != std::string::npos;
    CHECK(mentioned);
}

TEST_CASE("spectra via matrix agree with the closed-form path") {
    test::StableParamGenerator gen(1212);
    for (int i = 0; i < 20; ++i) {
        const auto p = gen.next();
        const auto w = gen.frequencies(p, 10);
        std::vector<double> sorted(w);
        std::sort(sorted.begin(), sorted.end());
        const FrequencyGrid grid(sorted);
        const double ds = default_signal_detuning(p);
        const auto a = oracle::spectra_via_matrix(grid, ds, p);
        const auto b = combined_spectra(grid, p, ds);
        for (std::size_t k = 0; k < grid.size(); ++k) {
            CHECK(test::rel(a.s_xx_plus[k], b.s_xx_plus[k]) < 1e-9);
            CHECK(test::rel(a.s_yy_minus[k], b.s_yy_minus[k]) < 1e-9);
        }
    }
}

TEST_CASE("unstable and ill-conditioned inputs") {
    CHECK_THROWS_AS(oracle::spectra_via_matrix(FrequencyGrid({0.0}), -1e5, test::gain_figure(3.2e4)),
                    UnstableParameters);
    auto p = test::gain_figure(3e4);
    p.gamma_m = 1e-30;
    p.g_minus = p.g_plus = 0.0;
    CHECK_THROWS_AS(oracle::transfer_matrix(p.delta_m(), p), DegenerateSystem);
}

}  // TEST_SUITE
