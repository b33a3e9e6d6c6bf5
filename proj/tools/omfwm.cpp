// omfwm.cpp — Command-line experiment runner
//
//   omfwm simulate <config.json> [-o DIR]
//   omfwm preset <name> [--emit-config | --run] [-o DIR]
//   omfwm oracle [--draws N] [--tol T] [--points K] [--seed S]
//   omfwm validate <config.json>
//
// Exit codes: 0 ok, 1 check failed, 2 malformed config, 3 unstable parameters, 4 I/O failure.
// OMFWM_THREADS overrides the worker thread count.

#include <iostream>

#include <CLI11.hpp>

#include "omfwm/cli/runner.hpp"
#include "omfwm/errors.hpp"

namespace {

using namespace omfwm;
using namespace omfwm::cli;

void print_manifest(const RunManifest& m) {
    for (const auto& w : m.warnings) std::cerr << "validation: " << w << "\n";
    std::cout << to_json(m).dump(2) << "\n";
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    const auto cfg = load_config(config_path);
    const auto m = run(cfg, out_dir);
    print_manifest(m);
    if (m.checks_passed && !*m.checks_passed) return exit_check_failed;
    return exit_ok;
}

int cmd_preset(const std::string& name, bool do_run, const std::string& out_dir) {
    const auto cfg = preset(name);
    if (!do_run) {
        const auto text = to_json(cfg).dump(2) + "\n";
        if (out_dir.empty())
            std::cout << text;
        else
            write_text(text, std::filesystem::path(out_dir) / (name + ".json"));
        return exit_ok;
    }
    print_manifest(run(cfg, out_dir.empty() ? std::filesystem::path(".") : std::filesystem::path(out_dir)));
    return exit_ok;
}

int cmd_oracle(std::size_t draws, std::size_t points, double tol, std::uint64_t seed) {
    const auto r = oracle_sweep(draws, points, tol, seed);
    nlohmann::json j = {{"draws", r.draws},
                        {"points_per_draw", points},
                        {"tolerance", tol},
                        {"seed", seed},
                        {"failures", r.failures},
                        {"max_error", r.max_error},
                        {"max_printed_appendix_error", r.max_printed_appendix_error},
                        {"deviations", r.deviations},
                        {"passed", r.passed()}};
    std::cout << j.dump(2) << "\n";
    return r.passed() ? exit_ok : exit_check_failed;
}

int cmd_validate(const std::string& config_path) {
    const auto cfg = load_config(config_path);
    if (cfg.mode == Mode::preset) {
        std::cout << "preset '" << cfg.preset_name << "' is valid\n";
        return exit_ok;
    }
    const auto p = resolve_params(cfg.params);
    const auto report = validate(p);
    nlohmann::json issues = nlohmann::json::array();
    for (const auto& i : report.issues)
        issues.push_back({{"severity", to_string(i.severity)}, {"code", i.code}, {"message", i.message}});
    std::cout << nlohmann::json{{"issues", issues}}.dump(2) << "\n";
    if (report.contains(codes::unstable)) return exit_unstable;
    if (report.has_errors()) return exit_config;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-tone optomechanical four-wave-mixing simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    auto* simulate = app.add_subcommand("simulate", "Run an experiment config");
    simulate->add_option("config", config_path, "Config JSON")->required();
    simulate->add_option("-o,--output-dir", out_dir, "Directory for relative output paths");

    std::string preset_name;
    bool emit = false;
    bool do_run = false;
    auto* pre = app.add_subcommand("preset", "Emit or run a figure preset");
    pre->add_option("name", preset_name, "Preset name")
        ->required()
        ->check(CLI::IsMember(preset_names()));
    auto* emit_flag = pre->add_flag("--emit-config", emit, "Print the preset config (default)");
    pre->add_flag("--run", do_run, "Run the preset")->excludes(emit_flag);
    pre->add_option("-o,--output-dir", out_dir, "Output directory");

    std::size_t draws = 100;
    std::size_t points = 10;
    double tol = 1e-9;
    std::uint64_t seed = 20201014;
    auto* orc = app.add_subcommand("oracle", "Random closed-form vs matrix-oracle comparison");
    orc->add_option("--draws", draws, "Number of random parameter draws")->check(CLI::PositiveNumber);
    orc->add_option("--points", points, "Frequencies per draw")->check(CLI::PositiveNumber);
    orc->add_option("--tol", tol, "Relative tolerance")->check(CLI::PositiveNumber);
    orc->add_option("--seed", seed, "RNG seed");

    auto* val = app.add_subcommand("validate", "Validate the parameters of a config");
    val->add_option("config", config_path, "Config JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    try {
        if (*simulate) return cmd_simulate(config_path, out_dir);
        if (*pre) return cmd_preset(preset_name, do_run, out_dir);
        if (*orc) return cmd_oracle(draws, points, tol, seed);
        if (*val) return cmd_validate(config_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return exit_ok;
}
