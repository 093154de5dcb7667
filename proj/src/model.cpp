#include "uavnet/model.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace uavnet {

const char* to_string(NodeRole role) {
    switch (role) {
        case NodeRole::ClusterHead: return "cluster_head";
        case NodeRole::GatheringUav: return "uav";
        case NodeRole::Leader: return "leader";
        case NodeRole::Jammer: return "jammer";
        case NodeRole::BackhaulUav: return "backhaul_uav";
        case NodeRole::BaseStation: return "base_station";
    }
    return "?";
}

std::optional<NodeRole> role_from_string(const std::string& name) {
    if (name == "cluster_head") return NodeRole::ClusterHead;
    if (name == "uav") return NodeRole::GatheringUav;
    if (name == "leader") return NodeRole::Leader;
    if (name == "jammer") return NodeRole::Jammer;
    if (name == "backhaul_uav") return NodeRole::BackhaulUav;
    if (name == "base_station") return NodeRole::BaseStation;
    return std::nullopt;
}

const char* to_string(EdgePolicy policy) {
    switch (policy) {
        case EdgePolicy::TwoHopPaired: return "two_hop_paired";
        case EdgePolicy::TwoHopNearest: return "two_hop_nearest";
        case EdgePolicy::Full: return "full";
        case EdgePolicy::BackhaulChain: return "backhaul_chain";
    }
    return "?";
}

std::optional<EdgePolicy> edge_policy_from_string(const std::string& name) {
    if (name == "two_hop_paired") return EdgePolicy::TwoHopPaired;
    if (name == "two_hop_nearest") return EdgePolicy::TwoHopNearest;
    if (name == "full") return EdgePolicy::Full;
    if (name == "backhaul_chain") return EdgePolicy::BackhaulChain;
    return std::nullopt;
}

std::size_t Scenario::count(NodeRole role) const {
    std::size_t n = 0;
    for (const auto& node : nodes)
        if (node.role == role) ++n;
    return n;
}

std::vector<const Node*> Scenario::nodes_with_role(NodeRole role) const {
    std::vector<const Node*> out;
    for (const auto& node : nodes)
        if (node.role == role) out.push_back(&node);
    return out;
}

const Node* Scenario::find(const std::string& id) const {
    for (const auto& node : nodes)
        if (node.id == id) return &node;
    return nullptr;
}

Node* Scenario::find(const std::string& id) {
    for (auto& node : nodes)
        if (node.id == id) return &node;
    return nullptr;
}

const Node* Scenario::leader() const {
    for (const auto& node : nodes)
        if (node.role == NodeRole::Leader) return &node;
    return nullptr;
}

double Scenario::bandwidth_share() const {
    if (bandwidth_share_override) return *bandwidth_share_override;
    const std::size_t n = count(NodeRole::GatheringUav);
    if (n == 0)
        throw std::logic_error("bandwidth_share: no gathering UAVs and no override");
    return channel.total_bandwidth / static_cast<double>(n);
}

double Scenario::min_rate() const {
    return rate_override ? *rate_override : channel.rate_req;
}

double Scenario::noise_variance() const {
    return channel.noise_psd * bandwidth_share();
}

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

} // namespace

std::vector<Violation> validate(const Scenario& s) {
    std::vector<Violation> out;
    auto add = [&](std::string code, std::string msg) {
        out.push_back({std::move(code), std::move(msg)});
    };

    std::set<std::string> seen;
    for (const auto& node : s.nodes) {
        if (!seen.insert(node.id).second)
            add("duplicate-id", "node id '" + node.id + "' appears more than once");
        if (!is_airborne(node.role) && node.position.z != 0.0)
            add("terrestrial-altitude",
                "terrestrial node '" + node.id + "' has z = " + std::to_string(node.position.z));
        if (node.position.z < 0.0)
            add("negative-altitude", "node '" + node.id + "' is below ground");
        if (!positive_finite(node.weight))
            add("node-weight", "node '" + node.id + "' has non-positive weight");
    }

    const std::size_t leaders = s.count(NodeRole::Leader);
    if (leaders == 0)
        add("no-leader", "scenario has no leader");
    else if (leaders > 1)
        add("multiple-leaders", "scenario has " + std::to_string(leaders) + " leaders");

    const std::size_t n_uav = s.count(NodeRole::GatheringUav);
    const std::size_t n_ch = s.count(NodeRole::ClusterHead);
    if (s.edge_policy == EdgePolicy::TwoHopPaired && n_uav != n_ch)
        add("paired-counts",
            "two_hop_paired needs equal UAV/CH counts, got " + std::to_string(n_uav) + " UAVs / " +
                std::to_string(n_ch) + " CHs");
    if (s.edge_policy != EdgePolicy::BackhaulChain && n_uav == 0 &&
        !s.bandwidth_share_override)
        add("no-uavs", "scenario has no gathering UAVs");

    const auto& c = s.channel;
    if (!positive_finite(c.alpha_los)) add("channel-alpha_los", "alpha_los must be > 0");
    if (!positive_finite(c.alpha_nlos)) add("channel-alpha_nlos", "alpha_nlos must be > 0");
    if (c.alpha_nlos < c.alpha_los)
        add("channel-alpha-order", "alpha_nlos must be >= alpha_los");
    if (!positive_finite(c.mu_los)) add("channel-mu_los", "mu_los must be > 0");
    if (!positive_finite(c.mu_nlos)) add("channel-mu_nlos", "mu_nlos must be > 0");
    if (!positive_finite(c.carrier_freq)) add("channel-carrier_freq", "carrier_freq must be > 0");
    if (!positive_finite(c.noise_psd)) add("channel-noise_psd", "noise_psd must be > 0");
    if (!positive_finite(c.total_bandwidth))
        add("channel-total_bandwidth", "total_bandwidth must be > 0");
    if (!positive_finite(c.rate_req) && c.rate_req != 0.0)
        add("channel-rate_req", "rate_req must be >= 0 and finite");

    if (!positive_finite(s.energy.node_energy)) add("energy-node_energy", "node_energy must be > 0");
    if (!positive_finite(s.energy.circuit_power))
        add("energy-circuit_power", "circuit_power must be > 0");
    if (!(std::isfinite(s.energy.jammer_power) && s.energy.jammer_power >= 0.0))
        add("energy-jammer_power", "jammer_power must be >= 0");

    if (!positive_finite(s.constraints.h_min)) add("constraints-h_min", "h_min must be > 0");
    if (!positive_finite(s.constraints.d_min)) add("constraints-d_min", "d_min must be > 0");

    return out;
}

} // namespace uavnet
