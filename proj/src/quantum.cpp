// quantum.cpp — Correlation terms, combined quadrature spectra and entanglement summary

#include "omfwm/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "omfwm/response.hpp"

namespace omfwm {

namespace {

using C = std::complex<double>;

// Coefficient sets at w1, w2, -w1, -w2.
struct Sidebands {
    CoefficientSet p1, p2, m1, m2;
};

CorrelationTerms terms_unchecked(double omega, double delta_s, const SystemParams& p,
                                 AppendixForm form) {
    const double w1 = omega - delta_s;
    const double w2 = omega + delta_s;
    const Sidebands s{coefficients(w1, p), coefficients(w2, p), coefficients(-w1, p),
                      coefficients(-w2, p)};
    const double ke = p.kappa_ex;
    const double k0 = p.kappa_0();
    const double thermal = ke * p.gamma_m;
    const double n = p.n_th;
    const bool printed = form == AppendixForm::printed;

    CorrelationTerms t;
    t.omega = omega;

    {  // signal-signal
        const C vac = (s.p1.A * ke - 1.0) * (s.m1.N * ke - 1.0) + s.p2.M * s.m2.B * ke * ke +
                      (s.p1.A * s.m1.N + s.p2.M * s.m2.B) * ke * k0;
        const C hot = s.p1.C * s.m1.Q + s.p2.P * (printed ? s.m2.Q : s.m2.D);
        const C cold = s.p1.D * s.m1.P + s.p2.Q * s.m2.C;
        t.s_ss = 0.5 * (vac + thermal * (hot * (n + 1.0) + cold * n));
    }
    {  // FWM-FWM
        const C vac = (s.p2.A * ke - 1.0) * (s.m2.N * ke - 1.0) + s.p1.M * s.m1.B * ke * ke +
                      (s.p2.A * s.m2.N + s.p1.M * s.m1.B) * ke * k0;
        const C hot = printed ? s.p2.C * s.m2.P + s.p1.P * s.m1.Q
                              : s.p2.C * s.m2.Q + s.p1.P * s.m1.D;
        const C cold = s.p2.D * s.m2.P + s.p1.Q * s.m1.C;
        t.s_cc = 0.5 * (vac + thermal * (hot * (n + 1.0) + cold * n));
    }
    {  // signal-FWM
        const C vac = ((s.p1.A * ke - 1.0) * s.m1.B + s.p2.M * (s.m2.N * ke - 1.0)) * ke +
                      (s.p1.A * s.m1.B + s.p2.M * s.m2.N) * ke * k0;
        const C hot = s.p1.C * s.m1.D + s.p2.P * s.m2.Q;
        const C cold = s.p1.D * s.m1.C + s.p2.Q * s.m2.P;
        t.s_sc = 0.5 * (vac + thermal * (hot * (n + 1.0) + cold * n));
    }
    {  // FWM-signal
        const C vac = ((s.p2.A * ke - 1.0) * s.m2.B + s.p1.M * (s.m1.N * ke - 1.0)) * ke +
                      (s.p2.A * s.m2.B + s.p1.M * s.m1.N) * ke * k0;
        const C hot = s.p2.C * s.m2.D + s.p1.P * s.m1.Q;
        const C cold = s.p2.D * s.m2.C + s.p1.Q * s.m1.P;
        t.s_cs = 0.5 * (vac + thermal * (hot * (n + 1.0) + cold * n));
    }
    return t;
}

void require_distinct_sidebands(double delta_s) {
    if (delta_s == 0.0)
        throw std::domain_error("signal detuning must be nonzero: signal and FWM sidebands coincide");
}

double s_db_at(double omega, double delta_s, const SystemParams& p) {
    return normalized_db(terms_unchecked(omega, delta_s, p, AppendixForm::derived).s_xx_plus().real());
}

// Distance from w = 0 along `direction` at which S drops to `level`.
double half_level_crossing(double delta_s, const SystemParams& p, double level, double step,
                           double limit, double direction) {
    double inside = 0.0;
    double x = step;
    while (x <= limit) {
        if (s_db_at(direction * x, delta_s, p) <= level) {
            double lo = inside;
            double hi = x;
            for (int i = 0; i < 60 && hi - lo > 1e-12 * hi; ++i) {
                const double mid = 0.5 * (lo + hi);
                (s_db_at(direction * mid, delta_s, p) > level ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        inside = x;
        x += step;
    }
    return limit;
}

}  // namespace

CorrelationTerms correlation_terms(double omega, double delta_s, const SystemParams& p,
                                   AppendixForm form) {
    require_stable(p);
    require_distinct_sidebands(delta_s);
    return terms_unchecked(omega, delta_s, p, form);
}

double default_signal_detuning(const SystemParams& p) {
    return -mechanical_response(p).delta_m_eff;
}

double normalized_db(double s_sq) {
    if (!(s_sq > 0.0)) throw std::domain_error("normalized_db: spectrum must be > 0");
    return -10.0 * std::log10(s_sq / kShotNoise);
}

QuadratureSpectra combined_spectra(const FrequencyGrid& grid, const SystemParams& p,
                                   std::optional<double> delta_s) {
    require_stable(p);
    const double ds = delta_s.value_or(default_signal_detuning(p));
    require_distinct_sidebands(ds);

    QuadratureSpectra out;
    out.grid = grid;
    out.delta_s_used = ds;
    out.n_th_used = p.n_th;
    out.s_xx_plus.reserve(grid.size());
    out.s_yy_minus.reserve(grid.size());
    out.s_db.reserve(grid.size());
    for (double w : grid.points()) {
        const auto t = terms_unchecked(w, ds, p, AppendixForm::derived);
        const auto x = t.s_xx_plus();
        const auto y = t.s_yy_minus();
        out.max_imag_residual = std::max(
            {out.max_imag_residual, std::abs(x.imag()) / std::abs(x), std::abs(y.imag()) / std::abs(y)});
        out.s_xx_plus.push_back(x.real());
        out.s_yy_minus.push_back(y.real());
        out.s_db.push_back(normalized_db(x.real()));
    }
    return out;
}

EntanglementReport s_max(const SystemParams& p, std::optional<double> delta_s) {
    require_stable(p);
    const double ds = delta_s.value_or(default_signal_detuning(p));
    require_distinct_sidebands(ds);

    EntanglementReport r;
    r.params_snapshot = p;
    r.delta_s_used = ds;
    r.s_max_db = s_db_at(0.0, ds, p);
    r.entangled = r.s_max_db > 0.0;
    if (!r.entangled) return r;

    const double gamma_eff = mechanical_response(p).gamma_eff;
    const double limit = 10.0 * p.kappa;
    const double step = std::max(gamma_eff / 50.0, limit * 1e-5);
    const double level = 0.5 * r.s_max_db;
    r.bandwidth = half_level_crossing(ds, p, level, step, limit, +1.0) +
                  half_level_crossing(ds, p, level, step, limit, -1.0);
    return r;
}

}  // namespace omfwm
