#include <doctest.h>

#include "omfwm/errors.hpp"
#include "omfwm/quantum.hpp"
#include "omfwm/response.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace omfwm;

TEST_SUITE("quantum") {

TEST_CASE("dB normalization") {
    CHECK(normalized_db(kShotNoise) == 0.0);
    CHECK(normalized_db(0.05) == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(normalized_db(5.0) == doctest::Approx(-10.0).epsilon(1e-14));
    CHECK_THROWS_AS(normalized_db(0.0), std::domain_error);
    CHECK_THROWS_AS(normalized_db(-1.0), std::domain_error);
}

TEST_CASE("coincident sidebands are rejected") {
    const auto p = test::entanglement_figure();
    CHECK_THROWS_AS(correlation_terms(0.0, 0.0, p), std::domain_error);
    const auto grid = FrequencyGrid::linspace(-1.0, 1.0, 3);
    CHECK_THROWS_AS(combined_spectra(grid, p, 0.0), std::domain_error);
}

TEST_CASE("unstable parameters are rejected") {
    auto p = test::entanglement_figure();
    p.g_plus = 1.5 * p.g_minus;
    CHECK_THROWS_AS(s_max(p), UnstableParameters);
    CHECK_THROWS_AS(correlation_terms(0.0, -p.delta_m(), p), UnstableParameters);
}

TEST_CASE("default detuning centers on the effective mechanical resonance") {
    const auto p = test::entanglement_figure();
    CHECK(default_signal_detuning(p) == -mechanical_response(p).delta_m_eff);
    const auto r = s_max(p);
    CHECK(r.delta_s_used == default_signal_detuning(p));
    CHECK(r.params_snapshot == p);
}

TEST_CASE("peak entanglement, frozen values") {
    // Frozen from an independent 4x4 input-output solve at w = 0.
    struct Row {
        double sigma, temperature_K, g_minus, escape, s_db;
    };
    const Row rows[] = {{0.75, 1.0, 1.2e5, 0.98, 13.536706505188974},
                        {0.85, 1.0, 1.2e5, 0.98, 15.202869133634264},
                        {0.95, 1.0, 1.2e5, 0.98, 16.210844877985142},
                        {0.95, 298.0, 1.8e5, 0.98, 3.394418951653626},
                        {0.95, 298.0, 1.2e5, 0.98, 0.012372709262305603}};
    for (const auto& r : rows) {
        const auto p = test::entanglement_figure(r.sigma, r.temperature_K, r.g_minus, r.escape);
        const auto rep = s_max(p);
        CHECK(rep.s_max_db == doctest::Approx(r.s_db).epsilon(1e-9));
        CHECK(rep.entangled == (rep.s_max_db > 0.0));
    }
}

TEST_CASE("bandwidth is a fraction of the effective damping and shrinks with sigma") {
    double last = std::numeric_limits<double>::infinity();
    for (double sigma : {0.75, 0.85, 0.95}) {
        const auto p = test::entanglement_figure(sigma);
        const auto rep = s_max(p);
        const double ge = mechanical_response(p).gamma_eff;
        CHECK(rep.bandwidth < last);
        CHECK(rep.bandwidth > 0.2 * ge);
        CHECK(rep.bandwidth < 2.0 * ge);
        last = rep.bandwidth;
        // The half-level crossing is really at S_max / 2.
        const auto g = FrequencyGrid({-0.5 * rep.bandwidth, 0.5 * rep.bandwidth});
        const auto s = combined_spectra(g, p);
        CHECK(s.s_db[0] == doctest::Approx(0.5 * rep.s_max_db).epsilon(1e-6));
        CHECK(s.s_db[1] == doctest::Approx(0.5 * rep.s_max_db).epsilon(1e-6));
    }
}

TEST_CASE("no entanglement means zero bandwidth") {
    auto p = test::entanglement_figure(0.75, 298.0);
    const auto rep = s_max(p);
    CHECK(rep.s_max_db < 0.0);
    CHECK_FALSE(rep.entangled);
    CHECK(rep.bandwidth == 0.0);
}

TEST_CASE("combined spectra bookkeeping") {
    const auto p = test::entanglement_figure();
    const auto grid = FrequencyGrid::linspace(-1e4, 1e4, 101);
    const auto s = combined_spectra(grid, p);
    REQUIRE(s.s_xx_plus.size() == grid.size());
    CHECK(s.n_th_used == p.n_th);
    CHECK(s.delta_s_used == default_signal_detuning(p));
    CHECK(s.max_imag_residual < 1e-10);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(s.s_db[i] == normalized_db(s.s_xx_plus[i]));
        const auto t = correlation_terms(grid[i], s.delta_s_used, p);
        CHECK(s.s_xx_plus[i] == doctest::Approx(t.s_xx_plus().real()).epsilon(1e-14));
    }
    // Symmetric in w for the centered detuning.
    CHECK(s.s_db.front() == doctest::Approx(s.s_db.back()).epsilon(1e-8));
}

TEST_CASE("property: the X+ and Y- spectra coincide") {
    test::StableParamGenerator gen(808);
    for (int i = 0; i < 100; ++i) {
        const auto p = gen.next();
        const double ds = default_signal_detuning(p) * gen.uniform(0.5, 1.5);
        for (double w : gen.frequencies(p, 20)) {
            if (std::abs(ds) < 1e-9 * p.omega_m) continue;
            const auto t = correlation_terms(w, ds, p);
            CHECK(test::rel(t.s_xx_plus(), t.s_yy_minus()) < 1e-10);
            CHECK(std::abs(t.s_xx_plus().imag()) <= 1e-10 * std::abs(t.s_xx_plus()));
            CHECK(t.s_xx_plus().real() > 0.0);
        }
    }
}

TEST_CASE("property: shot-noise anchor without optomechanical coupling") {
    test::StableParamGenerator gen(909);
    for (int i = 0; i < 100; ++i) {
        auto p = gen.next();
        p.g_minus = p.g_plus = 0.0;
        for (double w : gen.frequencies(p, 20)) {
            const auto t = correlation_terms(w, -p.delta_m(), p);
            CHECK(std::abs(t.s_xx_plus().real() - kShotNoise) < 1e-12);
        }
    }
}

TEST_CASE("property: squeezing degrades with temperature") {
    test::StableParamGenerator gen(1001);
    for (int i = 0; i < 50; ++i) {
        auto p = gen.next();
        const double ds = default_signal_detuning(p);
        const double cold = correlation_terms(0.0, ds, p).s_xx_plus().real();
        p.n_th = 2.0 * p.n_th + 1.0;
        const double hot = correlation_terms(0.0, ds, p).s_xx_plus().real();
        CHECK(hot >= cold * (1.0 - 1e-12));
    }
}

TEST_CASE("literal thermal pairings differ from the derived ones at finite temperature") {
    const auto p = test::entanglement_figure();
    const double ds = default_signal_detuning(p);
    const auto d = correlation_terms(0.0, ds, p, AppendixForm::derived);
    const auto q = correlation_terms(0.0, ds, p, AppendixForm::printed);
    CHECK(d.s_sc == q.s_sc);
    CHECK(d.s_cs == q.s_cs);
    CHECK(d.s_ss != q.s_ss);
    CHECK(test::rel(d.s_cc, q.s_cc) > 1e-3);
    CHECK(test::rel(d.s_xx_plus(), q.s_xx_plus()) > 1e-3);
}

}  // TEST_SUITE
