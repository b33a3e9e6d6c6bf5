// presets.cpp — Parameter sets and sweeps that regenerate each published figure

#include <algorithm>
#include <cmath>

#include "omfwm/cli/config.hpp"
#include "omfwm/constants.hpp"

namespace omfwm::cli {

using nlohmann::json;

namespace {

json rad_s(double v) { return {{"value", v}, {"unit", "rad_s"}}; }
json hz(double v) { return {{"value", v}, {"unit", "hz_cycles"}}; }
json ratio(const char* of, double v) { return {{"ratio_of", of}, {"value", v}}; }

// Gain figures: omega_m = 2 pi 585 kHz, gamma_m = 2 pi 5 Hz, G- = 3e4 rad/s.
json gain_params() {
    return {{"omega_m", hz(5.85e5)},         {"gamma_m", hz(5.0)},
            {"kappa", ratio("omega_m", 0.1)}, {"kappa_ex", ratio("kappa", 0.98)},
            {"omega_0", ratio("omega_m", 0.95)}, {"g_minus", rad_s(3e4)},
            {"g_plus", rad_s(3e4)},           {"n_th", 0.0}};
}

// Entanglement figures: omega_m = 2 pi 1.14 MHz, Q_m = 1.03e9, T = 1 K,
// G+ expressed as sigma = G+/G-.
json entanglement_params(double sigma) {
    return {{"omega_m", hz(1.14e6)},
            {"gamma_m", {{"quality_factor", 1.03e9}}},
            {"kappa", ratio("omega_m", 0.1)},
            {"kappa_ex", ratio("kappa", 0.98)},
            {"omega_0", ratio("omega_m", 0.95)},
            {"g_minus", rad_s(1.2e5)},
            {"g_plus", ratio("g_minus", sigma)},
            {"temperature_K", 1.0}};
}

std::vector<double> lin(double from, double to, std::size_t steps) {
    const auto g = FrequencyGrid::linspace(from, to, steps);
    return {g.points().begin(), g.points().end()};
}

std::vector<double> geom(double from, double to, std::size_t steps) {
    const auto g = FrequencyGrid::logspace(from, to, steps);
    return {g.points().begin(), g.points().end()};
}

ExperimentConfig base(std::string name, Mode mode, json params, std::string description) {
    ExperimentConfig c;
    c.mode = mode;
    c.params = std::move(params);
    c.output.path = std::move(name) + ".csv";
    c.description = std::move(description);
    return c;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"fig2a", "fig2b", "fig3", "fig4", "fig5", "fig6", "fig7"};
}

ExperimentConfig preset(std::string_view name) {
    const std::vector<double> fig2_couplings = {29900.0, 30000.0, 30070.0};

    if (name == "fig2a" || name == "fig2b") {
        const bool signal = name == "fig2a";
        auto c = base(std::string(name), Mode::gain_spectrum, gain_params(),
                      signal ? "signal intensity gain vs Delta_s for three TMS couplings"
                             : "FWM intensity gain vs -Delta_s for three TMS couplings");
        c.field = signal ? GainField::signal : GainField::fwm;
        c.sweep = SweepSpec{"g_plus", fig2_couplings};
        return c;
    }
    if (name == "fig3") {
        auto c = base("fig3", Mode::stability_scan, gain_params(),
                      "effective detuning and damping vs G+ (G- = 3e4 rad/s)");
        c.sweep = SweepSpec{"g_plus", lin(2.9e4, 3.01e4, 221)};
        return c;
    }
    if (name == "fig4") {
        auto c = base("fig4", Mode::peak_gain_sweep, gain_params(),
                      "peak signal/FWM gain vs intrinsic damping at G+ = G-");
        c.params["gamma_m"] = rad_s(constants::from_hz(5.0));
        auto values = geom(1.0, 200.0, 101);
        // Intrinsic dampings equal to the effective dampings of the fig3 points A, B, C.
        for (double v : {8.5, 31.4, 64.0}) values.push_back(v);
        std::sort(values.begin(), values.end());
        c.sweep = SweepSpec{"gamma_m", values};
        return c;
    }
    if (name == "fig5") {
        auto c = base("fig5", Mode::noise_spectrum, entanglement_params(0.95),
                      "normalized quadrature correlation spectrum for sigma = 0.75, 0.85, 0.95");
        c.sweep = SweepSpec{"g_plus", {0.75, 0.85, 0.95}};
        c.grid = GridSpec{-1e4, 1e4, 2001, Scale::lin};
        return c;
    }
    if (name == "fig6") {
        auto c = base("fig6", Mode::s_max_sweep, entanglement_params(0.95),
                      "S_max vs escape efficiency kappa_ex/kappa");
        c.series = SweepSpec{"g_plus", {0.75, 0.85, 0.95}};
        c.sweep = SweepSpec{"kappa_ex", lin(0.5, 0.98, 49)};
        return c;
    }
    if (name == "fig7") {
        auto c = base("fig7", Mode::s_max_sweep, entanglement_params(0.95),
                      "S_max vs temperature at sigma = 0.95; G- = 1.5e5 curve is an interpolated choice");
        c.series = SweepSpec{"g_minus", {1.2e5, 1.5e5, 1.8e5}};
        c.sweep = SweepSpec{"temperature_K", geom(1.0, 400.0, 81)};
        return c;
    }
    throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace omfwm::cli
