// classical.hpp — Reflected signal and four-wave-mixing (FWM) fields of a weak probe
//
// A monochromatic probe at detuning Delta_s from the effective cavity
// resonance leaves the cavity as a reflected signal at Delta_s and a
// conjugate FWM field at -Delta_s:
//   signal = (A[Delta_s] kappa_ex - 1) alpha_s
//   fwm    = B[-Delta_s] kappa_ex alpha_s^*

#pragma once

#include <complex>

#include "omfwm/grid.hpp"
#include "omfwm/params.hpp"

namespace omfwm {

struct ProbeConfig {
    double delta_s{0.0};
    std::complex<double> alpha_s{1.0, 0.0};
};

struct ReflectedAmplitudes {
    std::complex<double> signal;
    std::complex<double> fwm;
};

ReflectedAmplitudes reflected_amplitudes(const ProbeConfig& probe, const SystemParams& p);

// R_s[Delta_s] = |A[Delta_s] kappa_ex - 1|^2
double gain_signal(double delta_s, const SystemParams& p);
// R_c[-Delta_s] = |B[-Delta_s] kappa_ex|^2, parameterized by the probe detuning Delta_s.
double gain_fwm(double delta_s, const SystemParams& p);

struct PeakGains {
    double r_s_peak{0.0};
    double r_c_peak{0.0};
    double center_signal{0.0};  // Delta_s = -Delta'_m
    double center_fwm{0.0};     // -Delta_s = +Delta'_m
};

// Gains at the closed-form centers, not a numeric argmax.
PeakGains peak_gains(const SystemParams& p);

enum class GainField { signal, fwm };

// The signal series is indexed by Delta_s. The FWM series is indexed by the
// FWM detuning -Delta_s, so its grid is the mirror image of the signal grid
// and its peak sits at +Delta'_m.
SpectrumSeries gain_spectrum(const FrequencyGrid& grid, const SystemParams& p, GainField which);

// Center -/+ Delta'_m with half-span 40 gamma_eff.
FrequencyGrid default_gain_grid(const SystemParams& p, GainField which, std::size_t points = 2001,
                                double half_span_in_gamma_eff = 40.0);

}  // namespace omfwm
