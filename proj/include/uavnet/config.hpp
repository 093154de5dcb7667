#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "uavnet/harness.hpp"
#include "uavnet/model.hpp"
#include "uavnet/optimizer.hpp"

namespace uavnet {

/// Raised on malformed config input; `field` names the offending entry.
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error("config field '" + field + "': " + message),
          field_(std::move(field)) {}
    const std::string& field() const { return field_; }

  private:
    std::string field_;
};

/// Unit family expected for a quantity field.
enum class Unit { Length, Power, Frequency, Rate, Energy, PowerSpectralDensity, Ratio, None };

/// Parses "30 dBm", "2 GHz", "5 m", or a plain SI number into SI units.
double parse_quantity(const nlohmann::json& value, Unit unit, const std::string& field);

/// Everything a run needs, as read from one config file. `nodes` and
/// `generator` are alternative scenario sources; explicit nodes win.
struct AppConfig {
    ChannelParams channel;
    EnergyParams energy;
    Constraints constraints;
    EdgePolicy edge_policy = EdgePolicy::TwoHopPaired;
    OptimizerConfig optimizer;
    std::optional<ScenarioGenConfig> generator;
    std::optional<Scenario> explicit_scenario; // from "nodes"
    std::optional<Vec3> bs_position;
};

AppConfig load_config(const std::filesystem::path& path);
AppConfig config_from_json(const nlohmann::json& json);

/// Scenario for a run: the explicit roster when present, otherwise one
/// generated from the generator block with the given seed.
Scenario scenario_from_config(const AppConfig& config, std::uint64_t seed);

/// Serializes a concrete scenario back to the config schema (explicit
/// nodes, SI numbers) so outputs can be fed back in.
nlohmann::json scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::filesystem::path& path);

struct RunManifest {
    std::string command;
    std::string config_path;
    std::uint64_t master_seed = 0;
    std::string tool_version;
    std::string output_dir;
    std::string timestamp; // ISO 8601 UTC
};

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

} // namespace uavnet
