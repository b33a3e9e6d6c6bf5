// classical.cpp — Intensity gains of the reflected signal and FWM fields

#include "omfwm/classical.hpp"

#include <cmath>
#include <stdexcept>

#include "omfwm/errors.hpp"
#include "omfwm/response.hpp"

namespace omfwm {

namespace {

double signal_gain_unchecked(double delta_s, const SystemParams& p) {
    return std::norm(coefficients(delta_s, p).A * p.kappa_ex - 1.0);
}

double fwm_gain_unchecked(double delta_s, const SystemParams& p) {
    return std::norm(coefficients(-delta_s, p).B * p.kappa_ex);
}

}  // namespace

ReflectedAmplitudes reflected_amplitudes(const ProbeConfig& probe, const SystemParams& p) {
    require_stable(p);
    if (probe.alpha_s == 0.0)
        throw InvalidParameters("reflected_amplitudes: alpha_s must be nonzero");
    const auto at_signal = coefficients(probe.delta_s, p);
    const auto at_fwm = coefficients(-probe.delta_s, p);
    return {(at_signal.A * p.kappa_ex - 1.0) * probe.alpha_s,
            at_fwm.B * p.kappa_ex * std::conj(probe.alpha_s)};
}

double gain_signal(double delta_s, const SystemParams& p) {
    require_stable(p);
    return signal_gain_unchecked(delta_s, p);
}

double gain_fwm(double delta_s, const SystemParams& p) {
    require_stable(p);
    return fwm_gain_unchecked(delta_s, p);
}

PeakGains peak_gains(const SystemParams& p) {
    require_stable(p);
    const double d = mechanical_response(p).delta_m_eff;
    PeakGains g;
    g.center_signal = -d;
    g.center_fwm = d;
    g.r_s_peak = signal_gain_unchecked(-d, p);
    g.r_c_peak = fwm_gain_unchecked(-d, p);
    return g;
}

SpectrumSeries gain_spectrum(const FrequencyGrid& grid, const SystemParams& p, GainField which) {
    require_stable(p);
    SpectrumSeries s;
    s.grid = grid;
    s.params_snapshot = p;
    s.kind = which == GainField::signal ? SpectrumKind::gain_signal : SpectrumKind::gain_fwm;
    s.values.reserve(grid.size());
    for (double x : grid.points()) {
        // FWM grid points are -Delta_s.
        s.values.push_back(which == GainField::signal ? signal_gain_unchecked(x, p)
                                                      : fwm_gain_unchecked(-x, p));
    }
    return s;
}

FrequencyGrid default_gain_grid(const SystemParams& p, GainField which, std::size_t points,
                                double half_span_in_gamma_eff) {
    require_stable(p);
    const auto r = mechanical_response(p);
    const double center = which == GainField::signal ? -r.delta_m_eff : r.delta_m_eff;
    const double half = half_span_in_gamma_eff * r.gamma_eff;
    return FrequencyGrid::linspace(center - half, center + half, points);
}

}  // namespace omfwm
