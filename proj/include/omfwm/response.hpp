// response.hpp — Frequency-domain linear response of the linearized optomechanical system
//
// Fourier convention o[w] = \int o(t) e^{i w t} dt, so d/dt -> -i w, and the
// conjugate relation (o[w])^dagger = o^dagger[-w]. Under this convention
//   chi_c[w] = 1 / (kappa/2 - i w)
//   chi_m[w] = 1 / (gamma_m/2 - i (w - Delta_m))
// and the conjugate-mode response is chi_m^*[-w]. Convention::printed flips to
// the literal -(i w + kappa/2)^{-1} form; it exists only so that the oracle
// comparison can demonstrate that convention mismatches are caught.

#pragma once

#include <complex>

#include "omfwm/params.hpp"

namespace omfwm {

using cplx = std::complex<double>;

enum class Convention { passive, printed };

struct Susceptibility {
    cplx value;
};

Susceptibility chi_c(double omega, double kappa, Convention conv = Convention::passive);
Susceptibility chi_m(double omega, double delta_m, double gamma_m,
                     Convention conv = Convention::passive);

// Sigma[w] = chi_c[w] (G-^2 - G+^2). 2 Re Sigma is the frequency-dependent
// optical damping, Im Sigma the frequency-dependent shift.
cplx self_energy(double omega, const SystemParams& p, Convention conv = Convention::passive);

// Weak-coupling optical damping kappa (G-^2 - G+^2) / (Delta_m^2 + kappa^2/4).
double opt_damping_wc(const SystemParams& p);
// Weak-coupling frequency shift Delta_m (G-^2 - G+^2) / (Delta_m^2 + kappa^2/4).
double freq_shift_wc(const SystemParams& p);

struct MechanicalResponse {
    double gamma_opt{0.0};
    double delta_omega_m{0.0};
    double gamma_eff{0.0};    // gamma_m + gamma_opt
    double delta_m_eff{0.0};  // Delta_m + delta_omega_m
};

MechanicalResponse mechanical_response(const SystemParams& p);

struct StabilityMargin {
    double gamma_eff{0.0};
    double g_plus_max{0.0};  // root of gamma_eff(G+) = 0 at fixed other parameters
    bool stable() const noexcept { return gamma_eff > 0.0; }
};

StabilityMargin stability_margin(const SystemParams& p);

// Throws InvalidParameters on structural errors and UnstableParameters when gamma_eff <= 0.
void require_stable(const SystemParams& p);

// The eight transfer coefficients at one frequency. A..D build a_1[w] from
// the inputs, M..Q build a_1^dagger[w]:
//   a_1       = A (sqrt(kex) a_in + sqrt(k0) a_v) + B (.. a_in^dag ..) + C sqrt(gm) eta + D sqrt(gm) eta^dag
//   a_1^dag   = M (.. a_in ..) + N (.. a_in^dag ..) + P sqrt(gm) eta + Q sqrt(gm) eta^dag
struct CoefficientSet {
    double omega{0.0};
    cplx A, B, C, D, M, N, P, Q;
};

// Closed-form coefficients. No stability check: callers that need a physical
// steady state go through require_stable first.
CoefficientSet coefficients(double omega, const SystemParams& p,
                            Convention conv = Convention::passive);

}  // namespace omfwm
