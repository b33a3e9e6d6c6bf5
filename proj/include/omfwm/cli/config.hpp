// config.hpp — JSON experiment configuration and parameter ingestion
//
// Parameters ingest as {value, unit} pairs with unit "rad_s" or "hz_cycles",
// or as ratios {ratio_of: <key>, value: r}. gamma_m additionally accepts
// {quality_factor: Q} (gamma_m = omega_m / Q). Exactly one of n_th or
// temperature_K must be present.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "omfwm/classical.hpp"
#include "omfwm/grid.hpp"
#include "omfwm/params.hpp"

namespace omfwm::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

SystemParams resolve_params(const nlohmann::json& spec);

// Sets the numeric value of `key` while keeping its form (unit, ratio, quality factor).
nlohmann::json override_param(nlohmann::json spec, const std::string& key, double value);

enum class Mode {
    gain_spectrum,
    noise_spectrum,
    s_max_sweep,
    stability_scan,
    oracle_check,
    peak_gain_sweep,
    preset
};
enum class Scale { lin, log };
enum class Format { csv, json };

std::string to_string(Mode m);

struct GridSpec {
    double from{0.0};
    double to{0.0};
    std::size_t steps{0};
    Scale scale{Scale::lin};

    FrequencyGrid build() const;
};

struct SweepSpec {
    std::string variable;
    std::vector<double> values;  // in the key's own unit
};

struct OutputSpec {
    std::string path;
    Format format{Format::csv};
};

struct ExperimentConfig {
    nlohmann::json params;
    Mode mode{Mode::gain_spectrum};
    std::optional<SweepSpec> sweep;
    std::optional<SweepSpec> series;  // outer loop, one curve per value
    std::optional<GridSpec> grid;
    OutputSpec output;
    std::string preset_name;              // mode == preset
    GainField field{GainField::signal};   // gain_spectrum
    std::optional<double> delta_s;        // noise_spectrum / s_max_sweep override, rad/s
    double tol{1e-9};                     // oracle_check
    std::string description;
};

ExperimentConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const ExperimentConfig& c);
ExperimentConfig load_config(const std::filesystem::path& path);

std::vector<std::string> preset_names();
// Throws ConfigError for unknown names.
ExperimentConfig preset(std::string_view name);

}  // namespace omfwm::cli
