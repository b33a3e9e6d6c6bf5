// quantum.hpp — Two-color quadrature correlation spectra and entanglement metrics
//
// Quadratures of the reflected fluctuation field at analysis frequency w, with
// w1 = w - Delta_s and w2 = w + Delta_s:
//   X_s = (a_r1[w1] + a_r1^dag[w2]) / sqrt2,   X_c = (a_r1[w2] + a_r1^dag[w1]) / sqrt2
//   X^+ = (X_s + X_c) / sqrt2,                 Y^- = (Y_s - Y_c) / sqrt2
// Spectra are the stationary part (coefficient of delta(w + w')) of the field
// correlators. Shot noise is 1/2.

#pragma once

#include <complex>
#include <optional>

#include "omfwm/grid.hpp"
#include "omfwm/params.hpp"

namespace omfwm {

inline constexpr double kShotNoise = 0.5;

// derived: thermal pairings recomputed from the input-output relations.
// printed: the literal published pairings, kept for deviation reports only.
enum class AppendixForm { derived, printed };

struct CorrelationTerms {
    double omega{0.0};
    // X-quadrature versions. The Y versions share s_ss and s_cc and carry
    // negated cross terms.
    std::complex<double> s_ss, s_cc, s_sc, s_cs;

    std::complex<double> s_xx_plus() const noexcept { return 0.5 * (s_ss + s_cc + s_sc + s_cs); }
    std::complex<double> s_yy_minus() const noexcept {
        const auto sc_y = -s_sc;
        const auto cs_y = -s_cs;
        return 0.5 * (s_ss + s_cc - sc_y - cs_y);
    }
};

// Throws UnstableParameters for unstable parameters and std::domain_error if
// delta_s == 0 (signal and FWM sidebands coincide).
CorrelationTerms correlation_terms(double omega, double delta_s, const SystemParams& p,
                                   AppendixForm form = AppendixForm::derived);

struct QuadratureSpectra {
    FrequencyGrid grid;
    std::vector<double> s_xx_plus;
    std::vector<double> s_yy_minus;
    std::vector<double> s_db;
    double delta_s_used{0.0};
    double n_th_used{0.0};
    double max_imag_residual{0.0};  // largest |Im S| / |S| over the grid before taking real parts
};

// Signal detuning that centers the spectra on the peak gain: -Delta'_m.
double default_signal_detuning(const SystemParams& p);

QuadratureSpectra combined_spectra(const FrequencyGrid& grid, const SystemParams& p,
                                   std::optional<double> delta_s = std::nullopt);

// S = -10 log10(s_sq / 0.5). Throws std::domain_error for s_sq <= 0.
double normalized_db(double s_sq);

struct EntanglementReport {
    double s_max_db{0.0};    // S(0)
    double bandwidth{0.0};   // full width where S(w) > s_max_db / 2, rad/s
    bool entangled{false};   // s_max_db > 0
    double delta_s_used{0.0};
    SystemParams params_snapshot;
};

EntanglementReport s_max(const SystemParams& p, std::optional<double> delta_s = std::nullopt);

}  // namespace omfwm
