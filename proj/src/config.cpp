#include "uavnet/config.hpp"

#include <cmath>
#include <ctime>
#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

#include "uavnet/version.hpp"

namespace uavnet {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

struct UnitDef {
    double scale = 1.0;
    bool decibel = false;       // value is 10^(v/10) * scale
};

const std::map<std::string, UnitDef>& unit_table(Unit unit) {
    static const std::map<std::string, UnitDef> length = {
        {"m", {1.0}}, {"km", {1e3}}, {"cm", {1e-2}}};
    static const std::map<std::string, UnitDef> power = {
        {"W", {1.0}}, {"mW", {1e-3}}, {"kW", {1e3}},
        {"dBm", {1e-3, true}}, {"dBW", {1.0, true}}};
    static const std::map<std::string, UnitDef> freq = {
        {"Hz", {1.0}}, {"kHz", {1e3}}, {"KHz", {1e3}}, {"MHz", {1e6}}, {"GHz", {1e9}}};
    static const std::map<std::string, UnitDef> rate = {
        {"bps", {1.0}}, {"kbps", {1e3}}, {"Mbps", {1e6}}, {"Gbps", {1e9}}};
    static const std::map<std::string, UnitDef> energy = {
        {"J", {1.0}}, {"kJ", {1e3}}, {"MJ", {1e6}}, {"Wh", {3600.0}}};
    static const std::map<std::string, UnitDef> psd = {
        {"W/Hz", {1.0}}, {"mW/Hz", {1e-3}}, {"dBm/Hz", {1e-3, true}}};
    static const std::map<std::string, UnitDef> ratio = {{"dB", {1.0, true}}, {"", {1.0}}};
    static const std::map<std::string, UnitDef> none = {{"", {1.0}}};
    switch (unit) {
        case Unit::Length: return length;
        case Unit::Power: return power;
        case Unit::Frequency: return freq;
        case Unit::Rate: return rate;
        case Unit::Energy: return energy;
        case Unit::PowerSpectralDensity: return psd;
        case Unit::Ratio: return ratio;
        case Unit::None: return none;
    }
    return none;
}

} // namespace

double parse_quantity(const json& value, Unit unit, const std::string& field) {
    if (value.is_number()) return value.get<double>();
    if (!value.is_string())
        throw ConfigError(field, "expected a number or a '<value> <unit>' string");

    const std::string text = value.get<std::string>();
    std::size_t consumed = 0;
    double magnitude = 0.0;
    try {
        magnitude = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ConfigError(field, "cannot parse '" + text + "' as a quantity");
    }
    std::string suffix = text.substr(consumed);
    while (!suffix.empty() && suffix.front() == ' ') suffix.erase(suffix.begin());
    while (!suffix.empty() && suffix.back() == ' ') suffix.pop_back();

    const auto& table = unit_table(unit);
    const auto it = table.find(suffix);
    if (it == table.end())
        throw ConfigError(field, "unknown unit '" + suffix + "' in '" + text + "'");
    if (it->second.decibel) return std::pow(10.0, magnitude / 10.0) * it->second.scale;
    return magnitude * it->second.scale;
}

namespace {

double get_quantity(const json& obj, const std::string& key, Unit unit, double fallback,
                    const std::string& scope) {
    if (!obj.contains(key)) return fallback;
    return parse_quantity(obj.at(key), unit, scope + "." + key);
}

Vec3 parse_position(const json& value, const std::string& field) {
    if (!value.is_array() || value.size() != 3 || !value[0].is_number() ||
        !value[1].is_number() || !value[2].is_number())
        throw ConfigError(field, "expected [x, y, z] in meters");
    return {value[0].get<double>(), value[1].get<double>(), value[2].get<double>()};
}

} // namespace

AppConfig config_from_json(const json& j) {
    AppConfig cfg;
    if (!j.is_object()) throw ConfigError("<root>", "config must be a JSON object");

    if (j.contains("channel")) {
        const auto& c = j.at("channel");
        auto& ch = cfg.channel;
        if (c.contains("alpha_los")) ch.alpha_los = parse_quantity(c["alpha_los"], Unit::None, "channel.alpha_los");
        if (c.contains("alpha_nlos")) ch.alpha_nlos = parse_quantity(c["alpha_nlos"], Unit::None, "channel.alpha_nlos");
        ch.mu_los = get_quantity(c, "mu_los", Unit::Ratio, ch.mu_los, "channel");
        ch.mu_nlos = get_quantity(c, "mu_nlos", Unit::Ratio, ch.mu_nlos, "channel");
        ch.carrier_freq = get_quantity(c, "carrier_freq", Unit::Frequency, ch.carrier_freq, "channel");
        ch.noise_psd = get_quantity(c, "noise_psd", Unit::PowerSpectralDensity, ch.noise_psd, "channel");
        ch.total_bandwidth =
            get_quantity(c, "total_bandwidth", Unit::Frequency, ch.total_bandwidth, "channel");
        ch.rate_req = get_quantity(c, "rate_req", Unit::Rate, ch.rate_req, "channel");
    }
    if (j.contains("energy")) {
        const auto& e = j.at("energy");
        cfg.energy.node_energy =
            get_quantity(e, "node_energy", Unit::Energy, cfg.energy.node_energy, "energy");
        cfg.energy.circuit_power =
            get_quantity(e, "circuit_power", Unit::Power, cfg.energy.circuit_power, "energy");
        cfg.energy.jammer_power =
            get_quantity(e, "jammer_power", Unit::Power, cfg.energy.jammer_power, "energy");
    }
    if (j.contains("constraints")) {
        const auto& c = j.at("constraints");
        cfg.constraints.h_min = get_quantity(c, "h_min", Unit::Length, cfg.constraints.h_min, "constraints");
        cfg.constraints.d_min = get_quantity(c, "d_min", Unit::Length, cfg.constraints.d_min, "constraints");
    }
    if (j.contains("edge_policy")) {
        const auto name = j.at("edge_policy").get<std::string>();
        const auto policy = edge_policy_from_string(name);
        if (!policy) throw ConfigError("edge_policy", "unknown policy '" + name + "'");
        cfg.edge_policy = *policy;
    }
    if (j.contains("optimizer")) {
        const auto& o = j.at("optimizer");
        auto& opt = cfg.optimizer;
        opt.step_size = get_quantity(o, "step_size", Unit::Length, opt.step_size, "optimizer");
        if (o.contains("backtracking")) opt.backtracking = o["backtracking"].get<double>();
        if (o.contains("max_iterations")) opt.max_iterations = o["max_iterations"].get<int>();
        if (o.contains("grad_tol")) opt.grad_tol = o["grad_tol"].get<double>();
        opt.min_step = get_quantity(o, "min_step", Unit::Length, opt.min_step, "optimizer");
        if (!(opt.step_size > 0)) throw ConfigError("optimizer.step_size", "must be > 0");
        if (!(opt.backtracking > 0 && opt.backtracking < 1))
            throw ConfigError("optimizer.backtracking", "must be in (0, 1)");
        if (opt.max_iterations < 0) throw ConfigError("optimizer.max_iterations", "must be >= 0");
        if (!(opt.grad_tol > 0)) throw ConfigError("optimizer.grad_tol", "must be > 0");
        if (!(opt.min_step > 0)) throw ConfigError("optimizer.min_step", "must be > 0");
    }
    if (j.contains("generator")) {
        const auto& g = j.at("generator");
        ScenarioGenConfig gen;
        if (g.contains("region")) {
            const auto& r = g.at("region");
            if (!r.contains("x") || !r.contains("y") || r["x"].size() != 2 || r["y"].size() != 2)
                throw ConfigError("generator.region", "expected {\"x\": [lo, hi], \"y\": [lo, hi]}");
            gen.region.x_min = r["x"][0].get<double>();
            gen.region.x_max = r["x"][1].get<double>();
            gen.region.y_min = r["y"][0].get<double>();
            gen.region.y_max = r["y"][1].get<double>();
        }
        if (g.contains("uavs")) gen.uavs = g["uavs"].get<int>();
        if (g.contains("cluster_heads")) gen.cluster_heads = g["cluster_heads"].get<int>();
        if (g.contains("jammers")) gen.jammers = g["jammers"].get<int>();
        if (g.contains("uav_altitude")) {
            if (g["uav_altitude"].size() != 2)
                throw ConfigError("generator.uav_altitude", "expected [lo, hi] meters");
            gen.uav_altitude_min = g["uav_altitude"][0].get<double>();
            gen.uav_altitude_max = g["uav_altitude"][1].get<double>();
        }
        cfg.generator = gen;
    }
    if (j.contains("bs")) cfg.bs_position = parse_position(j.at("bs"), "bs");
    if (j.contains("nodes")) {
        Scenario s;
        s.channel = cfg.channel;
        s.energy = cfg.energy;
        s.constraints = cfg.constraints;
        s.edge_policy = cfg.edge_policy;
        for (std::size_t i = 0; i < j.at("nodes").size(); ++i) {
            const auto& n = j["nodes"][i];
            const std::string scope = "nodes[" + std::to_string(i) + "]";
            Node node;
            if (!n.contains("id") || !n["id"].is_string())
                throw ConfigError(scope + ".id", "missing node id");
            node.id = n["id"].get<std::string>();
            if (!n.contains("role")) throw ConfigError(scope + ".role", "missing node role");
            const auto role = role_from_string(n["role"].get<std::string>());
            if (!role) throw ConfigError(scope + ".role", "unknown role '" + n["role"].get<std::string>() + "'");
            node.role = *role;
            if (!n.contains("position")) throw ConfigError(scope + ".position", "missing position");
            node.position = parse_position(n["position"], scope + ".position");
            if (n.contains("weight")) node.weight = n["weight"].get<double>();
            s.nodes.push_back(std::move(node));
        }
        cfg.explicit_scenario = std::move(s);
    }
    return cfg;
}

AppConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path.string() + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("<file>", std::string("JSON parse error: ") + e.what());
    }
    return config_from_json(j);
}

Scenario scenario_from_config(const AppConfig& config, std::uint64_t seed) {
    if (config.explicit_scenario) return *config.explicit_scenario;
    if (!config.generator)
        throw ConfigError("nodes", "config provides neither explicit nodes nor a generator block");
    ScenarioGenConfig gen = *config.generator;
    gen.seed = seed;
    return generate_scenario(gen, config.channel, config.energy, config.constraints,
                             config.edge_policy);
}

nlohmann::json scenario_to_json(const Scenario& s) {
    ordered_json j;
    j["schema_version"] = 1;
    j["channel"] = {{"alpha_los", s.channel.alpha_los},
                    {"alpha_nlos", s.channel.alpha_nlos},
                    {"mu_los", s.channel.mu_los},
                    {"mu_nlos", s.channel.mu_nlos},
                    {"carrier_freq", s.channel.carrier_freq},
                    {"noise_psd", s.channel.noise_psd},
                    {"total_bandwidth", s.channel.total_bandwidth},
                    {"rate_req", s.channel.rate_req}};
    j["energy"] = {{"node_energy", s.energy.node_energy},
                   {"circuit_power", s.energy.circuit_power},
                   {"jammer_power", s.energy.jammer_power}};
    j["constraints"] = {{"h_min", s.constraints.h_min}, {"d_min", s.constraints.d_min}};
    j["edge_policy"] = to_string(s.edge_policy);
    ordered_json nodes = ordered_json::array();
    for (const auto& n : s.nodes) {
        ordered_json node = {{"id", n.id},
                             {"role", to_string(n.role)},
                             {"position", {n.position.x, n.position.y, n.position.z}}};
        if (n.weight != 1.0) node["weight"] = n.weight;
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    return j;
}

void save_scenario(const Scenario& scenario, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << scenario_to_json(scenario).dump(2) << '\n';
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    ordered_json j;
    j["schema_version"] = 1;
    j["tool_version"] = manifest.tool_version;
    j["command"] = manifest.command;
    j["config_path"] = manifest.config_path;
    j["master_seed"] = manifest.master_seed;
    j["output_dir"] = manifest.output_dir;
    j["timestamp"] = manifest.timestamp;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << j.dump(2) << '\n';
}

} // namespace uavnet
