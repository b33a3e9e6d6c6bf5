#include <doctest.h>

#include "omfwm/errors.hpp"
#include "omfwm/response.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace omfwm;

TEST_SUITE("response") {

TEST_CASE("susceptibilities at resonance") {
    CHECK(chi_c(0.0, 2.0).value == cplx(1.0, 0.0));
    CHECK(chi_m(5.0, 5.0, 4.0).value == cplx(0.5, 0.0));
    // Passive response: Re chi > 0 for both conventions of the mode.
    CHECK(chi_c(3.0, 2.0).value.real() > 0.0);
    CHECK(std::abs(chi_c(3.0, 2.0).value - cplx(0.1, 0.3)) < 1e-16);
    CHECK(chi_c(3.0, 2.0, Convention::printed).value == -std::conj(chi_c(3.0, 2.0).value));
    CHECK(chi_m(3.0, 1.0, 2.0, Convention::printed).value != chi_m(3.0, 1.0, 2.0).value);
}

TEST_CASE("weak-coupling damping and shift, frozen values") {
    struct Row {
        double g_plus, delta_m_eff, gamma_eff;
    };
    // Frozen from 30-digit evaluation of the closed forms.
    const Row rows[] = {{29000.0, 183943.685476753705, 352.44641003749878},
                        {29900.0, 183799.466612936587, 64.00868240326385},
                        {30000.0, 183783.170235002904, 31.41592653589793},
                        {30070.0, 183771.730395341244, 8.536247212577909},
                        {30100.0, 183766.819445122865, -1.2856532241803913}};
    for (const auto& r : rows) {
        const auto m = mechanical_response(test::gain_figure(r.g_plus));
        CHECK(m.delta_m_eff == doctest::Approx(r.delta_m_eff).epsilon(1e-13));
        CHECK(m.gamma_eff == doctest::Approx(r.gamma_eff).epsilon(1e-10));
    }
    const auto m = mechanical_response(test::gain_figure(29900.0));
    CHECK(m.delta_omega_m == doctest::Approx(16.29637793368296).epsilon(1e-12));
    CHECK(m.gamma_opt == doctest::Approx(32.5927558673659).epsilon(1e-12));
}

TEST_CASE("self-energy at Delta_m reproduces the weak-coupling forms") {
    const auto p = test::gain_figure(29900.0);
    const cplx s = self_energy(p.delta_m(), p);
    CHECK(s.real() == doctest::Approx(16.2963779336829583).epsilon(1e-12));
    CHECK(s.imag() == doctest::Approx(16.2963779336829583).epsilon(1e-12));
    CHECK(2.0 * s.real() == doctest::Approx(opt_damping_wc(p)).epsilon(1e-13));
    CHECK(s.imag() == doctest::Approx(freq_shift_wc(p)).epsilon(1e-13));
}

TEST_CASE("balanced couplings cancel the optical spring and damping") {
    const auto p = test::gain_figure(3e4);
    CHECK(opt_damping_wc(p) == 0.0);
    CHECK(freq_shift_wc(p) == 0.0);
    CHECK(mechanical_response(p).gamma_eff == p.gamma_m);
}

TEST_CASE("stability root at gain-figure parameters") {
    const auto p = test::gain_figure(3e4);
    const auto s = stability_margin(p);
    CHECK(s.g_plus_max == doctest::Approx(30096.07).epsilon(1e-6));
    auto q = p;
    q.g_plus = s.g_plus_max;
    CHECK(std::abs(mechanical_response(q).gamma_eff) < 1e-9 * p.gamma_m);
    q.g_plus = 0.999 * s.g_plus_max;
    CHECK_NOTHROW(require_stable(q));
    q.g_plus = 1.001 * s.g_plus_max;
    CHECK_THROWS_AS(require_stable(q), UnstableParameters);
    q.kappa_ex = 2.0 * q.kappa;
    CHECK_THROWS_AS(require_stable(q), InvalidParameters);
}

TEST_CASE("property: shift over damping equals Delta_m over kappa") {
    test::StableParamGenerator gen(101);
    for (int i = 0; i < 200; ++i) {
        const auto p = gen.next();
        if (p.g_minus == p.g_plus) continue;
        CHECK(test::rel(freq_shift_wc(p) / opt_damping_wc(p), p.delta_m() / p.kappa) < 1e-14);
    }
}

TEST_CASE("property: the stability root zeroes gamma_eff") {
    test::StableParamGenerator gen(202);
    for (int i = 0; i < 200; ++i) {
        auto p = gen.next();
        const auto s = stability_margin(p);
        CHECK(s.stable());
        p.g_plus = s.g_plus_max;
        CHECK(std::abs(mechanical_response(p).gamma_eff) <= 1e-8 * p.gamma_m + 1e-12 * p.kappa);
    }
}

TEST_CASE("property: damping decreases monotonically in G+") {
    test::StableParamGenerator gen(303);
    for (int i = 0; i < 200; ++i) {
        auto p = gen.next();
        const double before = mechanical_response(p).gamma_eff;
        p.g_plus *= 1.01;
        p.g_plus += 1e-3;
        CHECK(mechanical_response(p).gamma_eff < before);
    }
}

TEST_CASE("coefficients at zero coupling are bare cavity and bare mechanics") {
    auto p = test::gain_figure();
    p.g_minus = p.g_plus = 0.0;
    const double w = 1234.5;
    const auto c = coefficients(w, p);
    CHECK(c.A == chi_c(w, p.kappa).value);
    CHECK(c.N == chi_c(w, p.kappa).value);
    CHECK(c.B == cplx{});
    CHECK(c.M == cplx{});
    CHECK(c.C == cplx{});
    CHECK(c.D == cplx{});
    CHECK(c.P == cplx{});
    CHECK(c.Q == cplx{});
}

TEST_CASE("property: structural identities of the coefficients") {
    test::StableParamGenerator gen(404);
    for (int i = 0; i < 100; ++i) {
        const auto p = gen.next();
        const double ratio = p.g_plus / p.g_minus;
        for (double w : gen.frequencies(p, 20)) {
            const auto c = coefficients(w, p);
            const double scale = std::abs(c.A) + std::abs(c.N);
            // M = -B exactly.
            CHECK(std::abs(c.M + c.B) <= 1e-13 * (std::abs(c.B) + scale * 1e-3));
            // P and Q are G+/G- rescalings of C and D.
            if (p.g_minus > 0.0 && p.g_plus > 0.0) {
                CHECK(std::abs(c.P + ratio * c.C) <= 1e-12 * std::abs(c.P) + 1e-300);
                CHECK(std::abs(c.Q + c.D / ratio) <= 1e-12 * std::abs(c.Q) + 1e-300);
            }
            // N is A with chi_m and its conjugate-mode partner exchanged, i.e. A^*[-w].
            CHECK(test::rel(c.N, std::conj(coefficients(-w, p).A)) < 1e-12);
        }
    }
}

TEST_CASE("property: B vanishes when either coupling does") {
    test::StableParamGenerator gen(505);
    for (int i = 0; i < 50; ++i) {
        auto p = gen.next();
        auto q = p;
        q.g_plus = 0.0;
        auto r = p;
        r.g_minus = 0.0;
        r.g_plus = std::min(p.g_plus, 0.5 * stability_margin(r).g_plus_max);
        for (double w : gen.frequencies(p, 20)) {
            CHECK(coefficients(w, q).B == cplx{});
            CHECK(coefficients(w, r).B == cplx{});
            CHECK(coefficients(w, q).M == cplx{});
        }
    }
}

}  // TEST_SUITE
