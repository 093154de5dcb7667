#include "uavnet/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "uavnet/spectral.hpp"

namespace uavnet {

const char* to_string(Method method) {
    switch (method) {
        case Method::Baseline: return "baseline";
        case Method::FixedLeader: return "fixed";
        case Method::CorridorLeader: return "corridor";
        case Method::FreeLeader: return "free";
    }
    return "?";
}

namespace {

Vec3 bounding_center(const Scenario& s) {
    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& node : s.nodes) {
        if (node.role == NodeRole::BaseStation) continue;
        x_lo = std::min(x_lo, node.position.x);
        x_hi = std::max(x_hi, node.position.x);
        y_lo = std::min(y_lo, node.position.y);
        y_hi = std::max(y_hi, node.position.y);
    }
    return {(x_lo + x_hi) / 2.0, (y_lo + y_hi) / 2.0, 0.0};
}

} // namespace

Scenario generate_scenario(const ScenarioGenConfig& config, const ChannelParams& channel,
                           const EnergyParams& energy, const Constraints& constraints,
                           EdgePolicy policy) {
    if (config.uavs < 1 || config.cluster_heads < 1)
        throw std::invalid_argument("generate_scenario: need at least one UAV and one CH");
    if (config.jammers < 0) throw std::invalid_argument("generate_scenario: negative jammer count");
    const Region& r = config.region;
    if (!(r.x_max > r.x_min) || !(r.y_max > r.y_min))
        throw std::invalid_argument("generate_scenario: degenerate region");

    Rng rng(config.seed);
    Scenario s;
    s.channel = channel;
    s.energy = energy;
    s.constraints = constraints;
    s.edge_policy = policy;

    for (int i = 0; i < config.cluster_heads; ++i)
        s.nodes.push_back({"ch" + std::to_string(i), NodeRole::ClusterHead,
                           {rng.uniform(r.x_min, r.x_max), rng.uniform(r.y_min, r.y_max), 0.0}});
    for (int i = 0; i < config.jammers; ++i)
        s.nodes.push_back({"jam" + std::to_string(i), NodeRole::Jammer,
                           {rng.uniform(r.x_min, r.x_max), rng.uniform(r.y_min, r.y_max), 0.0}});

    // Redraw the whole UAV set until the safety spacing holds.
    std::vector<Vec3> uavs(config.uavs);
    bool placed = false;
    for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
        for (auto& p : uavs)
            p = {rng.uniform(r.x_min, r.x_max), rng.uniform(r.y_min, r.y_max),
                 rng.uniform(config.uav_altitude_min, config.uav_altitude_max)};
        placed = true;
        for (std::size_t i = 0; i < uavs.size() && placed; ++i)
            for (std::size_t j = i + 1; j < uavs.size(); ++j)
                if (distance(uavs[i], uavs[j]) < constraints.d_min) {
                    placed = false;
                    break;
                }
    }
    if (!placed)
        throw std::runtime_error("generate_scenario: d_min infeasible for region after 1000 attempts");
    for (int i = 0; i < config.uavs; ++i)
        s.nodes.push_back({"uav" + std::to_string(i), NodeRole::GatheringUav, uavs[i]});

    Vec3 center = bounding_center(s);
    center.z = constraints.h_min;
    s.nodes.push_back({"leader", NodeRole::Leader, center});
    return s;
}

Scenario baseline_placement(const Scenario& scenario) {
    Scenario out = scenario;
    for (auto& node : out.nodes)
        if (node.role == NodeRole::GatheringUav)
            node.position.z = scenario.constraints.h_min / 2.0;
    Vec3 center = bounding_center(out);
    center.z = scenario.constraints.h_min;
    for (auto& node : out.nodes)
        if (node.role == NodeRole::Leader) node.position = center;
    return out;
}

MethodStats aggregate(const std::vector<double>& values) {
    MethodStats st;
    st.count = static_cast<int>(values.size());
    if (values.empty()) return st;
    double sum = 0.0;
    for (double v : values) sum += v;
    st.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) return st;
    double ss = 0.0;
    for (double v : values) ss += (v - st.mean) * (v - st.mean);
    const double stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    st.ci95_halfwidth = 1.96 * stddev / std::sqrt(static_cast<double>(values.size()));
    return st;
}

namespace {

MethodOutcome evaluate_static(const Scenario& s) {
    MethodOutcome out;
    const LifetimeGraph graph = build_graph(s);
    out.lifetime = network_lifetime(graph);
    out.lambda2 = eigen_lambda2(graph).lambda2;
    return out;
}

TrialResult run_trial(int trial, std::uint64_t master_seed, const ScenarioGenConfig& gen,
                      const ChannelParams& channel, const EnergyParams& energy,
                      const Constraints& constraints, const OptimizerConfig& optimizer,
                      EdgePolicy policy) {
    TrialResult result;
    result.trial = trial;
    result.seed = derive_seed(master_seed, static_cast<std::uint64_t>(trial));

    ScenarioGenConfig cfg = gen;
    cfg.seed = result.seed;
    const Scenario scenario = generate_scenario(cfg, channel, energy, constraints, policy);

    result.outcomes[Method::Baseline] = evaluate_static(baseline_placement(scenario));
    const std::pair<Method, LeaderMode> modes[] = {
        {Method::FixedLeader, LeaderMode::Fixed},
        {Method::CorridorLeader, LeaderMode::Corridor},
        {Method::FreeLeader, LeaderMode::Free},
    };
    for (auto [method, mode] : modes) {
        const auto t0 = std::chrono::steady_clock::now();
        auto [final_scenario, trace] = optimize_stage1(
            scenario, mode, optimizer, derive_seed(result.seed, static_cast<std::uint64_t>(method)));
        MethodOutcome out;
        out.lifetime = trace.rows.back().lifetime;
        out.lambda2 = trace.rows.back().lambda2;
        out.iterations = trace.rows.back().iteration;
        out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        result.outcomes[method] = out;
    }

    for (const auto& [method, out] : result.outcomes)
        if (!(out.lifetime > 0.0) || !std::isfinite(out.lifetime) || !(out.lambda2 > 0.0))
            result.excluded = true;
    return result;
}

} // namespace

MonteCarloResult monte_carlo(const ScenarioGenConfig& gen, const ChannelParams& channel,
                             const EnergyParams& energy, const Constraints& constraints,
                             const OptimizerConfig& optimizer, int trials,
                             std::uint64_t master_seed, int jobs, EdgePolicy policy) {
    if (trials < 2) throw std::invalid_argument("monte_carlo: need at least 2 trials");
    MonteCarloResult result;
    result.trials.resize(trials);

    jobs = std::max(1, jobs);
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (int t = next.fetch_add(1); t < trials; t = next.fetch_add(1))
            result.trials[t] =
                run_trial(t, master_seed, gen, channel, energy, constraints, optimizer, policy);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Aggregation in trial order, independent of thread scheduling.
    for (Method m : kAllMethods) {
        std::vector<double> values;
        values.reserve(trials);
        for (const auto& trial : result.trials)
            if (!trial.excluded) values.push_back(trial.outcomes.at(m).lifetime);
        result.stats[m] = aggregate(values);
    }
    for (const auto& trial : result.trials)
        if (trial.excluded) ++result.excluded;
    return result;
}

} // namespace uavnet
