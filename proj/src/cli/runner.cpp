// runner.cpp — Experiment execution, table assembly and run manifests

#include "omfwm/cli/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <set>
#include <sstream>

#include "omfwm/constants.hpp"
#include "omfwm/errors.hpp"
#include "omfwm/quantum.hpp"
#include "omfwm/response.hpp"
#include "omfwm/version.hpp"

namespace omfwm::cli {

using nlohmann::json;

namespace {

struct Point {
    std::optional<double> series_value;
    std::optional<double> sweep_value;
    SystemParams params;
};

std::vector<Point> expand_points(const ExperimentConfig& c) {
    const std::vector<double> none = {std::nan("")};
    const auto& outer = c.series ? c.series->values : none;
    const auto& inner = c.sweep ? c.sweep->values : none;
    std::vector<Point> pts;
    pts.reserve(outer.size() * inner.size());
    for (double s : outer) {
        json spec = c.params;
        if (c.series) spec = override_param(spec, c.series->variable, s);
        for (double v : inner) {
            json point_spec = spec;
            if (c.sweep) point_spec = override_param(point_spec, c.sweep->variable, v);
            Point p;
            if (c.series) p.series_value = s;
            if (c.sweep) p.sweep_value = v;
            p.params = resolve_params(point_spec);
            pts.push_back(p);
        }
    }
    return pts;
}

std::string describe(const SystemParams& p) {
    std::string s;
    const std::pair<const char*, double> fields[] = {
        {"omega_m", p.omega_m}, {"gamma_m", p.gamma_m}, {"kappa", p.kappa},
        {"kappa_ex", p.kappa_ex}, {"omega_0", p.omega_0}, {"g_minus", p.g_minus},
        {"g_plus", p.g_plus},   {"n_th", p.n_th}};
    for (const auto& [k, v] : fields) {
        if (!s.empty()) s += " ";
        s += std::string(k) + "=" + format_number(v);
    }
    return s;
}

using Rows = std::vector<std::vector<double>>;

struct ModeLayout {
    std::vector<std::string> columns;
    std::vector<std::string> notes;
};

ModeLayout layout_for(const ExperimentConfig& c) {
    switch (c.mode) {
        case Mode::gain_spectrum:
            if (c.field == GainField::signal)
                return {{"delta_s", "r_s"}, {"kind: gain_signal", "axis: delta_s (signal detuning)"}};
            return {{"minus_delta_s", "r_c"},
                    {"kind: gain_fwm", "axis: -delta_s (FWM detuning; probe sits at -axis)"}};
        case Mode::noise_spectrum:
            return {{"omega", "s_xx_plus", "s_yy_minus", "s_db"},
                    {"kind: noise_db", "shot_noise: 0.5", "delta_s: -delta_m_eff unless overridden"}};
        case Mode::s_max_sweep:
            return {{"s_max_db", "bandwidth", "entangled"},
                    {"bandwidth: full width where S(omega) exceeds s_max_db/2 (dB)"}};
        case Mode::stability_scan:
            return {{"delta_m_eff", "gamma_eff"}, {"stability: stable iff gamma_eff > 0"}};
        case Mode::peak_gain_sweep:
            return {{"r_s_peak", "r_c_peak", "gamma_eff", "delta_m_eff"},
                    {"centers: delta_s = -delta_m_eff (signal), -delta_s = +delta_m_eff (FWM)"}};
        case Mode::oracle_check: {
            std::vector<std::string> cols = {"omega"};
            for (const auto* n : oracle::kCoefficientNames) cols.push_back(std::string("err_") + n);
            for (const auto* n : {"err_s_xx_plus", "err_s_yy_minus", "err_printed_appendix",
                                  "condition_number", "passed"})
                cols.emplace_back(n);
            return {cols, {"errors: relative to the matrix-solved reconstruction"}};
        }
        case Mode::preset: break;
    }
    throw ConfigError("mode has no table layout");
}

struct PointResult {
    Rows rows;
    std::vector<std::string> notes;
    bool passed{true};
};

PointResult evaluate(const ExperimentConfig& c, const SystemParams& p) {
    PointResult r;
    switch (c.mode) {
        case Mode::gain_spectrum: {
            const auto grid = c.grid ? c.grid->build() : default_gain_grid(p, c.field);
            const auto s = gain_spectrum(grid, p, c.field);
            for (std::size_t i = 0; i < grid.size(); ++i) r.rows.push_back({grid[i], s.values[i]});
            break;
        }
        case Mode::noise_spectrum: {
            FrequencyGrid grid;
            if (c.grid) {
                grid = c.grid->build();
            } else {
                const double g = mechanical_response(p).gamma_eff;
                grid = FrequencyGrid::linspace(-2.0 * g, 2.0 * g, 801);
            }
            const auto s = combined_spectra(grid, p, c.delta_s);
            for (std::size_t i = 0; i < grid.size(); ++i)
                r.rows.push_back({grid[i], s.s_xx_plus[i], s.s_yy_minus[i], s.s_db[i]});
            r.notes.push_back("delta_s_used=" + format_number(s.delta_s_used));
            break;
        }
        case Mode::s_max_sweep: {
            const auto e = s_max(p, c.delta_s);
            r.rows.push_back({e.s_max_db, e.bandwidth, e.entangled ? 1.0 : 0.0});
            break;
        }
        case Mode::stability_scan: {
            require_valid(p);
            const auto m = mechanical_response(p);
            r.rows.push_back({m.delta_m_eff, m.gamma_eff});
            r.notes.push_back("g_plus_max=" + format_number(stability_margin(p).g_plus_max));
            break;
        }
        case Mode::peak_gain_sweep: {
            const auto g = peak_gains(p);
            const auto m = mechanical_response(p);
            r.rows.push_back({g.r_s_peak, g.r_c_peak, m.gamma_eff, m.delta_m_eff});
            break;
        }
        case Mode::oracle_check: {
            const auto cmp = oracle::compare(p, c.grid->build(), c.tol);
            for (const auto& pt : cmp.points) {
                std::vector<double> row = {pt.omega};
                row.insert(row.end(), pt.coefficient_errors.begin(), pt.coefficient_errors.end());
                row.insert(row.end(), {pt.s_xx_error, pt.s_yy_error, pt.printed_appendix_error,
                                       pt.condition_number, pt.passed ? 1.0 : 0.0});
                r.rows.push_back(std::move(row));
            }
            for (const auto& d : cmp.deviations) r.notes.push_back("deviation: " + d);
            r.passed = cmp.passed;
            break;
        }
        case Mode::preset: throw ConfigError("preset must be expanded before evaluation");
    }
    return r;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ExperimentConfig expand_preset(const ExperimentConfig& c) {
    if (c.mode != Mode::preset) return c;
    auto expanded = preset(c.preset_name);
    if (!c.output.path.empty()) expanded.output.path = c.output.path;
    return expanded;
}

}  // namespace

std::string config_hash(const ExperimentConfig& c) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char ch : to_json(c).dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Table compute_table(const ExperimentConfig& config, std::optional<bool>* checks_passed,
                    std::vector<std::string>* warnings) {
    const auto c = expand_preset(config);
    const auto points = expand_points(c);
    const auto layout = layout_for(c);

    std::vector<std::string> warn;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto report = validate(points[i].params);
        for (const auto& issue : report.issues) {
            if (issue.severity == Severity::error && issue.code != codes::unstable)
                throw InvalidParameters("point " + std::to_string(i) + ": " + issue.code + ": " +
                                        issue.message);
            const auto line = to_string(issue.severity) + " " + issue.code + ": " + issue.message;
            if (seen.insert("point " + std::to_string(i) + line).second && warn.size() < 1000)
                warn.push_back("point " + std::to_string(i) + ": " + line);
        }
    }

    const auto results = parallel_map<PointResult>(
        points.size(), [&](std::size_t i) { return evaluate(c, points[i].params); });

    Table t;
    t.metadata.push_back(std::string("generator: omfwm ") + kVersion);
    t.metadata.push_back("mode: " + to_string(c.mode));
    if (!c.description.empty()) t.metadata.push_back("description: " + c.description);
    t.metadata.push_back("config_hash: " + config_hash(c));
    t.metadata.push_back("units: rates and frequencies in rad/s");
    if (c.series) t.metadata.push_back("series: " + c.series->variable);
    if (c.sweep) t.metadata.push_back("sweep: " + c.sweep->variable);
    for (const auto& n : layout.notes) t.metadata.push_back(n);

    if (c.series) t.columns.push_back(c.series->variable);
    if (c.sweep) t.columns.push_back(c.sweep->variable);
    t.columns.insert(t.columns.end(), layout.columns.begin(), layout.columns.end());

    bool all_passed = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::string line = "point " + std::to_string(i) + ": " + describe(points[i].params);
        for (const auto& n : results[i].notes) line += " " + n;
        t.metadata.push_back(line);
        for (const auto& row : results[i].rows) {
            std::vector<double> full;
            if (points[i].series_value) full.push_back(*points[i].series_value);
            if (points[i].sweep_value) full.push_back(*points[i].sweep_value);
            full.insert(full.end(), row.begin(), row.end());
            t.rows.push_back(std::move(full));
        }
        all_passed = all_passed && results[i].passed;
    }
    if (checks_passed && c.mode == Mode::oracle_check) *checks_passed = all_passed;
    if (warnings) *warnings = std::move(warn);
    return t;
}

RunManifest run(const ExperimentConfig& config, const std::filesystem::path& output_dir) {
    const auto c = expand_preset(config);
    RunManifest m;
    m.config_hash = config_hash(c);
    m.library_version = kVersion;
    m.timestamp = utc_timestamp();

    const auto table = compute_table(c, &m.checks_passed, &m.warnings);

    std::filesystem::path out = c.output.path;
    if (out.is_relative() && !output_dir.empty()) out = output_dir / out;
    write_table(table, out, c.output.format);
    m.outputs.push_back(out.string());

    auto manifest_path = out;
    manifest_path.replace_extension();
    manifest_path += ".manifest.json";
    write_text(to_json(m).dump(2) + "\n", manifest_path);
    return m;
}

json to_json(const RunManifest& m) {
    json j = {{"config_hash", m.config_hash}, {"library_version", m.library_version},
              {"timestamp", m.timestamp},     {"warnings", m.warnings},
              {"outputs", m.outputs}};
    if (m.checks_passed) j["checks_passed"] = *m.checks_passed;
    return j;
}

int exit_code_for(const std::exception& e) noexcept {
    if (dynamic_cast<const IoError*>(&e)) return exit_io;
    if (dynamic_cast<const UnstableParameters*>(&e)) return exit_unstable;
    if (dynamic_cast<const DegenerateSystem*>(&e)) return exit_unstable;
    if (dynamic_cast<const ConfigError*>(&e)) return exit_config;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return exit_config;
    if (dynamic_cast<const std::domain_error*>(&e)) return exit_config;
    if (dynamic_cast<const nlohmann::json::exception*>(&e)) return exit_config;
    return exit_check_failed;
}

std::size_t thread_count() {
    if (const char* env = std::getenv(kThreadsEnv)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

SystemParams random_stable_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u(rng); };
    SystemParams p;
    p.omega_m = constants::from_hz(std::pow(10.0, uniform(5.0, 7.0)));
    p.kappa = p.omega_m * uniform(0.02, 0.2);
    p.kappa_ex = p.kappa * uniform(0.5, 1.0);
    p.omega_0 = p.omega_m * uniform(0.85, 0.99);
    p.gamma_m = p.omega_m * std::pow(10.0, uniform(-9.0, -4.0));
    p.g_minus = p.kappa * uniform(0.005, 0.1);
    p.g_plus = 0.0;
    const double g_max = stability_margin(p).g_plus_max;
    p.g_plus = g_max * uniform(0.0, 0.98);
    p.n_th = u(rng) < 0.2 ? 0.0 : std::pow(10.0, uniform(-2.0, 4.0));
    return p;
}

std::vector<double> random_frequencies(const SystemParams& p, std::mt19937_64& rng,
                                       std::size_t count) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto r = mechanical_response(p);
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 2 == 0) {
            const double center = (i % 4 == 0 ? 1.0 : -1.0) * r.delta_m_eff;
            out.push_back(center + 5.0 * r.gamma_eff * u(rng));
        } else {
            out.push_back(3.0 * p.kappa * u(rng));
        }
    }
    return out;
}

OracleSweepResult oracle_sweep(std::size_t draws, std::size_t points_per_draw, double tol,
                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<SystemParams, FrequencyGrid>> cases;
    cases.reserve(draws);
    for (std::size_t i = 0; i < draws; ++i) {
        const auto p = random_stable_params(rng);
        auto f = random_frequencies(p, rng, points_per_draw);
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        cases.emplace_back(p, FrequencyGrid(std::move(f)));
    }
    const auto results = parallel_map<oracle::OracleComparison>(draws, [&](std::size_t i) {
        return oracle::compare(cases[i].first, cases[i].second, tol);
    });
    OracleSweepResult out;
    out.draws = draws;
    for (std::size_t i = 0; i < draws; ++i) {
        const auto& r = results[i];
        out.max_error = std::max(out.max_error, r.max_error);
        out.max_printed_appendix_error =
            std::max(out.max_printed_appendix_error, r.max_printed_appendix_error);
        if (!r.passed) ++out.failures;
        for (const auto& d : r.deviations)
            out.deviations.push_back("draw " + std::to_string(i) + ": " + d);
    }
    return out;
}

}  // namespace omfwm::cli
