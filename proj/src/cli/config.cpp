// config.cpp — Parameter ingestion and experiment-config parsing

#include "omfwm/cli/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <set>

#include "omfwm/constants.hpp"

namespace omfwm::cli {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 7> kRateKeys = {"omega_m", "gamma_m",  "kappa", "kappa_ex",
                                                  "omega_0", "g_minus", "g_plus"};

bool is_rate_key(const std::string& k) {
    return std::find(kRateKeys.begin(), kRateKeys.end(), k) != kRateKeys.end();
}

double number_at(const json& obj, const char* key, const std::string& context) {
    if (!obj.contains(key) || !obj.at(key).is_number())
        throw ConfigError(context + ": '" + key + "' must be a number");
    return obj.at(key).get<double>();
}

class Resolver {
public:
    explicit Resolver(const json& spec) : spec_(spec) {}

    double rate(const std::string& key) {
        if (!spec_.contains(key)) throw ConfigError("params: missing '" + key + "'");
        if (visiting_.count(key)) throw ConfigError("params: circular ratio_of involving '" + key + "'");
        visiting_.insert(key);
        const double v = evaluate(key, spec_.at(key));
        visiting_.erase(key);
        return v;
    }

private:
    double evaluate(const std::string& key, const json& q) {
        const std::string ctx = "params." + key;
        if (!q.is_object()) throw ConfigError(ctx + ": expected an object {value, unit}");
        if (q.contains("ratio_of")) {
            if (!q.at("ratio_of").is_string()) throw ConfigError(ctx + ": 'ratio_of' must be a key name");
            const auto target = q.at("ratio_of").get<std::string>();
            if (!is_rate_key(target)) throw ConfigError(ctx + ": unknown ratio_of target '" + target + "'");
            return number_at(q, "value", ctx) * rate(target);
        }
        if (q.contains("quality_factor")) {
            if (key != "gamma_m") throw ConfigError(ctx + ": quality_factor is only valid for gamma_m");
            const double qf = number_at(q, "quality_factor", ctx);
            if (!(qf > 0.0)) throw ConfigError(ctx + ": quality_factor must be > 0");
            return rate("omega_m") / qf;
        }
        const double v = number_at(q, "value", ctx);
        if (!q.contains("unit") || !q.at("unit").is_string())
            throw ConfigError(ctx + ": 'unit' must be \"rad_s\" or \"hz_cycles\"");
        const auto unit = q.at("unit").get<std::string>();
        if (unit == "rad_s") return v;
        if (unit == "hz_cycles") return constants::from_hz(v);
        throw ConfigError(ctx + ": unknown unit '" + unit + "'");
    }

    const json& spec_;
    std::set<std::string> visiting_;
};

Scale parse_scale(const json& j, const std::string& ctx) {
    if (!j.contains("scale")) return Scale::lin;
    const auto s = j.at("scale").get<std::string>();
    if (s == "lin") return Scale::lin;
    if (s == "log") return Scale::log;
    throw ConfigError(ctx + ": scale must be lin or log");
}

GridSpec parse_grid(const json& j, const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected {from, to, steps}");
    GridSpec g;
    g.from = number_at(j, "from", ctx);
    g.to = number_at(j, "to", ctx);
    if (!j.contains("steps") || !j.at("steps").is_number_integer() || j.at("steps").get<long long>() < 1)
        throw ConfigError(ctx + ": 'steps' must be a positive integer");
    g.steps = j.at("steps").get<std::size_t>();
    g.scale = parse_scale(j, ctx);
    if (g.steps > 1 && !(g.to > g.from)) throw ConfigError(ctx + ": 'to' must exceed 'from'");
    if (g.scale == Scale::log && !(g.from > 0.0)) throw ConfigError(ctx + ": log scale needs from > 0");
    return g;
}

// Sweep variables must address a numeric entry of the params object.
void check_sweep_target(const json& params, const std::string& var, const std::string& ctx) {
    if (!params.contains(var)) throw ConfigError(ctx + ": variable '" + var + "' is not a params key");
    const auto& v = params.at(var);
    if (v.is_number()) return;
    if (v.is_object() && (v.contains("value") || v.contains("quality_factor"))) return;
    throw ConfigError(ctx + ": variable '" + var + "' does not address a numeric field");
}

SweepSpec parse_sweep(const json& j, const json& params, const std::string& ctx) {
    if (!j.is_object()) throw ConfigError(ctx + ": expected {variable, values}");
    if (!j.contains("variable") || !j.at("variable").is_string())
        throw ConfigError(ctx + ": 'variable' must be a string");
    SweepSpec s;
    s.variable = j.at("variable").get<std::string>();
    check_sweep_target(params, s.variable, ctx);
    if (!j.contains("values")) throw ConfigError(ctx + ": missing 'values'");
    const auto& v = j.at("values");
    if (v.is_array()) {
        for (const auto& x : v) {
            if (!x.is_number()) throw ConfigError(ctx + ": values must be numbers");
            s.values.push_back(x.get<double>());
        }
    } else {
        const auto g = parse_grid(v, ctx + ".values");
        const auto grid = g.build();
        s.values.assign(grid.points().begin(), grid.points().end());
    }
    if (s.values.empty()) throw ConfigError(ctx + ": sweep has no values");
    return s;
}

Mode parse_mode(const std::string& m) {
    static const std::pair<const char*, Mode> table[] = {
        {"gain_spectrum", Mode::gain_spectrum},   {"noise_spectrum", Mode::noise_spectrum},
        {"s_max_sweep", Mode::s_max_sweep},       {"stability_scan", Mode::stability_scan},
        {"oracle_check", Mode::oracle_check},     {"peak_gain_sweep", Mode::peak_gain_sweep},
        {"preset", Mode::preset}};
    for (const auto& [name, mode] : table)
        if (m == name) return mode;
    throw ConfigError("unknown mode '" + m + "'");
}

json sweep_to_json(const SweepSpec& s) { return {{"variable", s.variable}, {"values", s.values}}; }

}  // namespace

SystemParams resolve_params(const json& spec) {
    if (!spec.is_object()) throw ConfigError("params must be an object");
    static const std::set<std::string> allowed = {"omega_m", "gamma_m",  "kappa",  "kappa_ex",
                                                  "omega_0", "g_minus",  "g_plus", "n_th",
                                                  "temperature_K"};
    for (const auto& [k, _] : spec.items())
        if (!allowed.count(k)) throw ConfigError("params: unknown key '" + k + "'");

    Resolver r(spec);
    SystemParams p;
    p.omega_m = r.rate("omega_m");
    p.gamma_m = r.rate("gamma_m");
    p.kappa = r.rate("kappa");
    p.kappa_ex = r.rate("kappa_ex");
    p.omega_0 = r.rate("omega_0");
    p.g_minus = r.rate("g_minus");
    p.g_plus = r.rate("g_plus");

    const bool has_n = spec.contains("n_th");
    const bool has_t = spec.contains("temperature_K");
    if (has_n == has_t) throw ConfigError("params: exactly one of n_th or temperature_K is required");
    if (has_n) {
        p.n_th = number_at(spec, "n_th", "params");
    } else {
        const double t = number_at(spec, "temperature_K", "params");
        if (!(t >= 0.0)) throw ConfigError("params: temperature_K must be >= 0");
        if (!(p.omega_m > 0.0)) throw ConfigError("params: omega_m must be > 0 to convert temperature");
        p.n_th = thermal_occupation(p.omega_m, t);
    }
    return p;
}

json override_param(json spec, const std::string& key, double value) {
    check_sweep_target(spec, key, "override");
    auto& v = spec.at(key);
    if (v.is_number())
        v = value;
    else if (v.contains("quality_factor"))
        v["quality_factor"] = value;
    else
        v["value"] = value;
    return spec;
}

std::string to_string(Mode m) {
    switch (m) {
        case Mode::gain_spectrum: return "gain_spectrum";
        case Mode::noise_spectrum: return "noise_spectrum";
        case Mode::s_max_sweep: return "s_max_sweep";
        case Mode::stability_scan: return "stability_scan";
        case Mode::oracle_check: return "oracle_check";
        case Mode::peak_gain_sweep: return "peak_gain_sweep";
        case Mode::preset: return "preset";
    }
    return "unknown";
}

FrequencyGrid GridSpec::build() const {
    return scale == Scale::log ? FrequencyGrid::logspace(from, to, steps)
                               : FrequencyGrid::linspace(from, to, steps);
}

namespace {

ExperimentConfig parse_config_impl(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    ExperimentConfig c;
    if (!j.contains("mode") || !j.at("mode").is_string()) throw ConfigError("config: 'mode' is required");
    c.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("description")) c.description = j.at("description").get<std::string>();

    if (c.mode == Mode::preset) {
        if (!j.contains("preset") || !j.at("preset").is_string())
            throw ConfigError("config: preset mode needs 'preset'");
        c.preset_name = j.at("preset").get<std::string>();
        preset(c.preset_name);  // validates the name
        if (j.contains("output")) c.output.path = j.at("output").value("path", "");
        return c;
    }

    if (!j.contains("params")) throw ConfigError("config: 'params' is required");
    c.params = j.at("params");
    resolve_params(c.params);  // surface ingestion errors early

    if (j.contains("sweep")) c.sweep = parse_sweep(j.at("sweep"), c.params, "sweep");
    if (j.contains("series")) c.series = parse_sweep(j.at("series"), c.params, "series");
    if (c.sweep && c.series && c.sweep->variable == c.series->variable)
        throw ConfigError("config: sweep and series must address different variables");
    if (j.contains("grid")) c.grid = parse_grid(j.at("grid"), "grid");

    if (j.contains("field")) {
        const auto f = j.at("field").get<std::string>();
        if (f == "signal") c.field = GainField::signal;
        else if (f == "fwm") c.field = GainField::fwm;
        else throw ConfigError("config: field must be signal or fwm");
    }
    if (j.contains("delta_s")) {
        const auto& d = j.at("delta_s");
        json tmp = {{"omega_m", d}};
        c.delta_s = Resolver(tmp).rate("omega_m");
    }
    if (j.contains("tol")) {
        c.tol = number_at(j, "tol", "config");
        if (!(c.tol > 0.0)) throw ConfigError("config: tol must be > 0");
    }
    if (c.mode == Mode::oracle_check && !c.grid)
        throw ConfigError("config: oracle_check needs a 'grid' of frequencies");

    if (!j.contains("output") || !j.at("output").is_object())
        throw ConfigError("config: 'output' {path, format} is required");
    const auto& o = j.at("output");
    if (!o.contains("path") || !o.at("path").is_string() || o.at("path").get<std::string>().empty())
        throw ConfigError("config: output.path must be a non-empty string");
    c.output.path = o.at("path").get<std::string>();
    const auto fmt = o.value("format", "csv");
    if (fmt == "csv") c.output.format = Format::csv;
    else if (fmt == "json") c.output.format = Format::json;
    else throw ConfigError("config: output.format must be csv or json");
    return c;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    try {
        return parse_config_impl(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config type error: ") + e.what());
    }
}

json to_json(const ExperimentConfig& c) {
    json j;
    j["mode"] = to_string(c.mode);
    if (!c.description.empty()) j["description"] = c.description;
    if (c.mode == Mode::preset) {
        j["preset"] = c.preset_name;
        if (!c.output.path.empty()) j["output"] = {{"path", c.output.path}};
        return j;
    }
    j["params"] = c.params;
    if (c.sweep) j["sweep"] = sweep_to_json(*c.sweep);
    if (c.series) j["series"] = sweep_to_json(*c.series);
    if (c.grid) {
        j["grid"] = {{"from", c.grid->from}, {"to", c.grid->to}, {"steps", c.grid->steps},
                     {"scale", c.grid->scale == Scale::log ? "log" : "lin"}};
    }
    if (c.mode == Mode::gain_spectrum) j["field"] = c.field == GainField::signal ? "signal" : "fwm";
    if (c.delta_s) j["delta_s"] = {{"value", *c.delta_s}, {"unit", "rad_s"}};
    if (c.mode == Mode::oracle_check) j["tol"] = c.tol;
    j["output"] = {{"path", c.output.path}, {"format", c.output.format == Format::json ? "json" : "csv"}};
    return j;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("malformed JSON in '" + path.string() + "': " + e.what());
    }
    return parse_config(j);
}

}  // namespace omfwm::cli
