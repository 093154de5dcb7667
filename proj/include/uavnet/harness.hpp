#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uavnet/model.hpp"
#include "uavnet/optimizer.hpp"

namespace uavnet {

struct Region {
    double x_min = 0.0, x_max = 100.0;
    double y_min = -10.0, y_max = 40.0;
};

struct ScenarioGenConfig {
    Region region;
    int uavs = 5;
    int cluster_heads = 5;
    int jammers = 4;
    double uav_altitude_min = 10.0;
    double uav_altitude_max = 60.0;
    std::uint64_t seed = 0;
};

enum class Method { Baseline, FixedLeader, CorridorLeader, FreeLeader };

const char* to_string(Method method);
constexpr std::array<Method, 4> kAllMethods = {Method::Baseline, Method::FixedLeader,
                                               Method::CorridorLeader, Method::FreeLeader};

struct MethodOutcome {
    double lifetime = 0.0;
    double lambda2 = 0.0;
    int iterations = 0;
    double wall_seconds = 0.0;
};

struct TrialResult {
    int trial = 0;
    std::uint64_t seed = 0;
    bool excluded = false; // some link infeasible or the graph disconnected
    std::map<Method, MethodOutcome> outcomes;
};

struct MethodStats {
    double mean = 0.0;
    double ci95_halfwidth = 0.0;
    int count = 0;
};

struct MonteCarloResult {
    std::vector<TrialResult> trials;
    std::map<Method, MethodStats> stats;
    int excluded = 0;
};

/// Random scenario per the generation rules: CHs and jammers uniform on the
/// region at z = 0, UAVs uniform with altitudes in the band (the whole set
/// redrawn until d_min holds), leader at the bounding-rectangle center of
/// all nodes at altitude h_min. Deterministic in the seed.
Scenario generate_scenario(const ScenarioGenConfig& config, const ChannelParams& channel,
                           const EnergyParams& energy, const Constraints& constraints,
                           EdgePolicy policy = EdgePolicy::TwoHopPaired);

/// Middle-plane baseline: every UAV moved to altitude h_min/2 keeping its
/// xy, leader re-centered on the bounding rectangle at h_min.
Scenario baseline_placement(const Scenario& scenario);

/// Mean and normal-approximation 95% interval (mean +- 1.96 s/sqrt(n)).
MethodStats aggregate(const std::vector<double>& values);

/// Paired Monte Carlo comparison of the four methods over seeded trials.
/// Each trial draws one scenario and runs every method from it; trials are
/// independent and may be evaluated on several threads.
MonteCarloResult monte_carlo(const ScenarioGenConfig& gen, const ChannelParams& channel,
                             const EnergyParams& energy, const Constraints& constraints,
                             const OptimizerConfig& optimizer, int trials,
                             std::uint64_t master_seed, int jobs = 1,
                             EdgePolicy policy = EdgePolicy::TwoHopPaired);

} // namespace uavnet
