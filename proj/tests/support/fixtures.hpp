// fixtures.hpp — Published parameter sets and comparison helpers for tests

#pragma once

#include <cmath>
#include <complex>

#include "omfwm/constants.hpp"
#include "omfwm/params.hpp"

namespace omfwm::test {

// Gain figures: omega_m = 2 pi 585 kHz, gamma_m = 2 pi 5 Hz, kappa = 0.1 omega_m,
// kappa_ex = 0.98 kappa, omega_0 = 0.95 omega_m, G- = 3e4 rad/s.
inline SystemParams gain_figure(double g_plus = 3e4) {
    SystemParams p;
    p.omega_m = constants::from_hz(5.85e5);
    p.gamma_m = constants::from_hz(5.0);
    p.kappa = 0.1 * p.omega_m;
    p.kappa_ex = 0.98 * p.kappa;
    p.omega_0 = 0.95 * p.omega_m;
    p.g_minus = 3e4;
    p.g_plus = g_plus;
    p.n_th = 0.0;
    return p;
}

// Entanglement figures: omega_m = 2 pi 1.14 MHz, Q_m = 1.03e9, G- = 1.2e5 rad/s.
inline SystemParams entanglement_figure(double sigma = 0.95, double temperature_K = 1.0,
                                        double g_minus = 1.2e5, double escape = 0.98) {
    SystemParams p;
    p.omega_m = constants::from_hz(1.14e6);
    p.gamma_m = p.omega_m / 1.03e9;
    p.kappa = 0.1 * p.omega_m;
    p.kappa_ex = escape * p.kappa;
    p.omega_0 = 0.95 * p.omega_m;
    p.g_minus = g_minus;
    p.g_plus = sigma * g_minus;
    p.n_th = thermal_occupation(p.omega_m, temperature_K);
    return p;
}

inline SystemParams bare_cavity(double escape = 0.98, double n_th = 0.0) {
    auto p = gain_figure();
    p.g_minus = 0.0;
    p.g_plus = 0.0;
    p.kappa_ex = escape * p.kappa;
    p.n_th = n_th;
    return p;
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }
inline double rel(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace omfwm::test
