// runner.hpp — Executes experiment configurations and records run manifests

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "omfwm/cli/config.hpp"
#include "omfwm/cli/table.hpp"
#include "omfwm/oracle.hpp"

namespace omfwm::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_config = 2,
    exit_unstable = 3,
    exit_io = 4,
};

inline constexpr const char* kThreadsEnv = "OMFWM_THREADS";

struct RunManifest {
    std::string config_hash;
    std::string library_version;
    std::string timestamp;  // UTC, ISO 8601; the only non-deterministic field
    std::vector<std::string> warnings;
    std::vector<std::string> outputs;
    std::optional<bool> checks_passed;  // oracle_check only
};

nlohmann::json to_json(const RunManifest& m);

std::string config_hash(const ExperimentConfig& c);

// Computes the data table of a (non-preset) configuration without touching disk.
Table compute_table(const ExperimentConfig& c, std::optional<bool>* checks_passed = nullptr,
                    std::vector<std::string>* warnings = nullptr);

// Runs the configuration (expanding presets), writes the data file and a
// `<stem>.manifest.json` next to it. Relative output paths resolve against
// `output_dir` when given.
RunManifest run(const ExperimentConfig& c, const std::filesystem::path& output_dir = {});

// Maps an in-flight exception to the documented exit code.
int exit_code_for(const std::exception& e) noexcept;

std::size_t thread_count();

// Evaluates fn(i) for i in [0, n) on up to thread_count() threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

// Random stable parameter draws for oracle and property checks.
SystemParams random_stable_params(std::mt19937_64& rng);
// Frequencies clustered on the mechanical features (+/- Delta'_m) and spread across +/- 3 kappa.
std::vector<double> random_frequencies(const SystemParams& p, std::mt19937_64& rng,
                                       std::size_t count);

struct OracleSweepResult {
    std::size_t draws{0};
    std::size_t failures{0};
    double max_error{0.0};
    double max_printed_appendix_error{0.0};
    std::vector<std::string> deviations;
    bool passed() const noexcept { return failures == 0; }
};

OracleSweepResult oracle_sweep(std::size_t draws, std::size_t points_per_draw, double tol,
                               std::uint64_t seed);

}  // namespace omfwm::cli

#include "omfwm/cli/parallel.inl"
