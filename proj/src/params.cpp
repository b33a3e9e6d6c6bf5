// params.cpp — Parameter validation, bath occupation and pump coupling

#include "omfwm/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "omfwm/constants.hpp"
#include "omfwm/errors.hpp"
#include "omfwm/response.hpp"

namespace omfwm {

double SystemParams::sigma() const noexcept {
    if (g_minus > 0.0) return g_plus / g_minus;
    return g_plus > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

bool ValidationReport::has_errors() const noexcept {
    return std::any_of(issues.begin(), issues.end(),
                       [](const ValidationIssue& i) { return i.severity == Severity::error; });
}

bool ValidationReport::has_warnings() const noexcept {
    return std::any_of(issues.begin(), issues.end(),
                       [](const ValidationIssue& i) { return i.severity == Severity::warning; });
}

bool ValidationReport::contains(const std::string& code) const noexcept {
    return std::any_of(issues.begin(), issues.end(),
                       [&](const ValidationIssue& i) { return i.code == code; });
}

std::string to_string(Severity s) { return s == Severity::error ? "error" : "warning"; }

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

ValidationReport validate(const SystemParams& p) {
    ValidationReport r;
    auto error = [&](const char* code, std::string msg) {
        r.issues.push_back({Severity::error, code, std::move(msg)});
    };
    auto warn = [&](const char* code, std::string msg) {
        r.issues.push_back({Severity::warning, code, std::move(msg)});
    };

    const std::pair<const char*, double> fields[] = {
        {"omega_m", p.omega_m}, {"gamma_m", p.gamma_m}, {"kappa", p.kappa},
        {"kappa_ex", p.kappa_ex}, {"omega_0", p.omega_0}, {"g_minus", p.g_minus},
        {"g_plus", p.g_plus},   {"n_th", p.n_th}};
    for (const auto& [name, v] : fields) {
        if (!std::isfinite(v)) error(codes::non_finite, std::string(name) + " is not finite");
    }
    if (r.has_errors()) return r;

    if (p.omega_m <= 0.0) error(codes::non_positive_rate, "omega_m must be > 0");
    if (p.gamma_m <= 0.0) error(codes::non_positive_rate, "gamma_m must be > 0");
    if (p.kappa <= 0.0) error(codes::non_positive_rate, "kappa must be > 0");
    if (p.kappa_ex <= 0.0 || p.kappa_ex > p.kappa)
        error(codes::kappa_ex_range,
              "kappa_ex must satisfy 0 < kappa_ex <= kappa (got kappa_ex/kappa = " +
                  fmt(p.kappa > 0.0 ? p.kappa_ex / p.kappa : p.kappa_ex) + ")");
    if (p.g_minus < 0.0 || p.g_plus < 0.0)
        error(codes::negative_coupling, "couplings g_minus, g_plus must be >= 0");
    if (p.n_th < 0.0) error(codes::negative_occupation, "n_th must be >= 0");
    if (r.has_errors()) return r;

    if (p.kappa > kResolvedSidebandLimit * p.omega_m)
        warn(codes::unresolved_sideband,
             "kappa/omega_m = " + fmt(p.kappa / p.omega_m) + " exceeds " +
                 fmt(kResolvedSidebandLimit) + "; rotating-wave approximation is questionable");
    const double g_max = std::max(p.g_minus, p.g_plus);
    if (g_max > kWeakCouplingLimit * p.kappa)
        warn(codes::strong_coupling, "max(G-, G+)/kappa = " + fmt(g_max / p.kappa) +
                                         " exceeds " + fmt(kWeakCouplingLimit) +
                                         "; weak-coupling damping formulas lose accuracy");

    const auto margin = stability_margin(p);
    if (!margin.stable())
        error(codes::unstable, "gamma_eff = " + fmt(margin.gamma_eff) +
                                   " rad/s <= 0 (G+ must stay below " + fmt(margin.g_plus_max) +
                                   " rad/s)");
    return r;
}

void require_valid(const SystemParams& p) {
    const auto report = validate(p);
    std::string msg;
    for (const auto& issue : report.issues) {
        if (issue.severity != Severity::error || issue.code == codes::unstable) continue;
        if (!msg.empty()) msg += "; ";
        msg += issue.code + ": " + issue.message;
    }
    if (!msg.empty()) throw InvalidParameters(msg);
}

double thermal_occupation(double omega_m, double temperature_K) {
    if (!(omega_m > 0.0)) throw InvalidParameters("thermal_occupation: omega_m must be > 0");
    if (!(temperature_K >= 0.0))
        throw InvalidParameters("thermal_occupation: temperature must be >= 0");
    if (temperature_K == 0.0) return 0.0;
    const double x = constants::hbar * omega_m / (constants::k_B * temperature_K);
    // exp(-x) is the exact limit long before expm1 overflows.
    if (x > 700.0) return std::exp(-x);
    return 1.0 / std::expm1(x);
}

double coupling_from_pump(const DriveConfig& d, const SystemParams& p, Sideband sideband) {
    if (!(d.g0 > 0.0) || !(d.pump_frequency > 0.0) || !(d.pump_power >= 0.0))
        throw InvalidParameters(
            "coupling_from_pump: g0 and pump_frequency must be > 0, pump_power >= 0");
    require_valid(p);
    const double sign = sideband == Sideband::lower ? -1.0 : 1.0;
    const std::complex<double> denom{p.kappa / 2.0, sign * p.omega_0};
    const double alpha_in = std::sqrt(d.pump_power / (constants::hbar * d.pump_frequency));
    return d.g0 * std::sqrt(p.kappa_ex) * alpha_in / std::abs(denom);
}

}  // namespace omfwm
