// params.hpp — Physical parameter model of the two-tone driven optomechanical cavity
//
// All rates and frequencies are angular (rad/s). The bath enters only through
// its mean phonon occupation n_th; temperatures are converted on ingestion.

#pragma once

#include <string>
#include <vector>

namespace omfwm {

struct SystemParams {
    double omega_m{0.0};   // mechanical resonance frequency
    double gamma_m{0.0};   // intrinsic mechanical damping
    double kappa{0.0};     // total cavity decay
    double kappa_ex{0.0};  // input-mirror (external) decay
    double omega_0{0.0};   // two-tone modulation frequency
    double g_minus{0.0};   // beam-splitter coupling G-
    double g_plus{0.0};    // two-mode-squeezing coupling G+
    double n_th{0.0};      // thermal phonon occupation

    double kappa_0() const noexcept { return kappa - kappa_ex; }
    double delta_m() const noexcept { return omega_m - omega_0; }
    // G+/G-; 0 when both couplings vanish, +inf when only G+ is present.
    double sigma() const noexcept;

    bool operator==(const SystemParams&) const = default;
};

struct DriveConfig {
    double g0{0.0};              // single-photon coupling, rad/s
    double pump_power{0.0};      // power of one pump tone, W
    double pump_frequency{0.0};  // optical angular frequency of that tone, rad/s
};

enum class Sideband { lower, upper };

enum class Severity { error, warning };

struct ValidationIssue {
    Severity severity;
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool has_errors() const noexcept;
    bool has_warnings() const noexcept;
    bool empty() const noexcept { return issues.empty(); }
    bool contains(const std::string& code) const noexcept;
};

// Issue codes.
namespace codes {
inline constexpr const char* non_finite = "E_NONFINITE";
inline constexpr const char* non_positive_rate = "E_NONPOSITIVE_RATE";
inline constexpr const char* kappa_ex_range = "E_KAPPA_EX_RANGE";
inline constexpr const char* negative_coupling = "E_NEGATIVE_COUPLING";
inline constexpr const char* negative_occupation = "E_NEGATIVE_OCCUPATION";
inline constexpr const char* unstable = "E_UNSTABLE";
inline constexpr const char* unresolved_sideband = "W_UNRESOLVED_SIDEBAND";
inline constexpr const char* strong_coupling = "W_STRONG_COUPLING";
}  // namespace codes

// Thresholds for the regime warnings.
inline constexpr double kResolvedSidebandLimit = 0.2;  // kappa / omega_m
inline constexpr double kWeakCouplingLimit = 0.1;      // max(G-, G+) / kappa

ValidationReport validate(const SystemParams& p);

// Throws InvalidParameters listing every structural error in the report.
void require_valid(const SystemParams& p);

// Bose-Einstein occupation 1/(exp(hbar omega / k_B T) - 1); exactly 0 at T = 0.
double thermal_occupation(double omega_m, double temperature_K);

// Coupling G = g0 |alpha_bar| produced by one pump tone, with
// |alpha_bar| = sqrt(kappa_ex) sqrt(P / hbar omega_pump) / |-/+ i omega_0 + kappa/2|.
double coupling_from_pump(const DriveConfig& d, const SystemParams& p, Sideband sideband);

std::string to_string(Severity s);

}  // namespace omfwm
