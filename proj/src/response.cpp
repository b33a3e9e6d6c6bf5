// response.cpp — Susceptibilities, self-energy, mechanical dressing and transfer coefficients

#include "omfwm/response.hpp"

#include <cmath>
#include <sstream>

#include "omfwm/errors.hpp"

namespace omfwm {

namespace {
constexpr cplx I{0.0, 1.0};
}

Susceptibility chi_c(double omega, double kappa, Convention conv) {
    if (conv == Convention::printed) return {-1.0 / (I * omega + kappa / 2.0)};
    return {1.0 / (kappa / 2.0 - I * omega)};
}

Susceptibility chi_m(double omega, double delta_m, double gamma_m, Convention conv) {
    if (conv == Convention::printed) return {-1.0 / ((I * omega - delta_m) + gamma_m / 2.0)};
    return {1.0 / (gamma_m / 2.0 - I * (omega - delta_m))};
}

cplx self_energy(double omega, const SystemParams& p, Convention conv) {
    const double imbalance = p.g_minus * p.g_minus - p.g_plus * p.g_plus;
    return chi_c(omega, p.kappa, conv).value * imbalance;
}

namespace {

double lorentz_weight(const SystemParams& p) {
    const double dm = p.delta_m();
    return (p.g_minus * p.g_minus - p.g_plus * p.g_plus) / (dm * dm + p.kappa * p.kappa / 4.0);
}

}  // namespace

double opt_damping_wc(const SystemParams& p) { return p.kappa * lorentz_weight(p); }

double freq_shift_wc(const SystemParams& p) { return p.delta_m() * lorentz_weight(p); }

MechanicalResponse mechanical_response(const SystemParams& p) {
    MechanicalResponse r;
    r.gamma_opt = opt_damping_wc(p);
    r.delta_omega_m = freq_shift_wc(p);
    r.gamma_eff = p.gamma_m + r.gamma_opt;
    r.delta_m_eff = p.delta_m() + r.delta_omega_m;
    return r;
}

StabilityMargin stability_margin(const SystemParams& p) {
    const double dm = p.delta_m();
    StabilityMargin m;
    m.gamma_eff = p.gamma_m + opt_damping_wc(p);
    m.g_plus_max =
        std::sqrt(p.g_minus * p.g_minus + p.gamma_m * (dm * dm + p.kappa * p.kappa / 4.0) / p.kappa);
    return m;
}

void require_stable(const SystemParams& p) {
    require_valid(p);
    const auto m = stability_margin(p);
    if (!m.stable()) {
        std::ostringstream os;
        os << "unstable parameters: gamma_eff = " << m.gamma_eff
           << " rad/s <= 0 (G+ = " << p.g_plus << " must stay below " << m.g_plus_max << ")";
        throw UnstableParameters(os.str());
    }
}

CoefficientSet coefficients(double omega, const SystemParams& p, Convention conv) {
    const double dm = p.delta_m();
    const double gm2 = p.g_minus * p.g_minus;
    const double gp2 = p.g_plus * p.g_plus;
    const double gmgp = p.g_minus * p.g_plus;

    const cplx c = chi_c(omega, p.kappa, conv).value;
    const cplx m = chi_m(omega, dm, p.gamma_m, conv).value;
    const cplx mt = std::conj(chi_m(-omega, dm, p.gamma_m, conv).value);  // chi_m^*[-w]
    const cplx sigma = self_energy(omega, p, conv);

    const cplx dressed_m = 1.0 + m * sigma;
    const cplx dressed_mt = 1.0 + mt * sigma;
    const cplx denom = dressed_m * dressed_mt;

    CoefficientSet s;
    s.omega = omega;
    s.A = c * (1.0 + c * (gm2 * mt - gp2 * m)) / denom;
    s.B = c * c * gmgp * (mt - m) / denom;
    s.C = -I * c * m * p.g_minus / dressed_m;
    s.D = -I * c * mt * p.g_plus / dressed_mt;
    s.M = c * c * gmgp * (m - mt) / denom;
    s.N = c * (1.0 + c * (gm2 * m - gp2 * mt)) / denom;
    s.P = I * c * m * p.g_plus / dressed_m;
    s.Q = I * c * mt * p.g_minus / dressed_mt;
    return s;
}

}  // namespace omfwm
