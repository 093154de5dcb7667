#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavnet/geometry.hpp"

namespace uavnet {

enum class NodeRole {
    ClusterHead,
    GatheringUav,
    Leader,
    Jammer,
    BackhaulUav,
    BaseStation,
};

const char* to_string(NodeRole role);
std::optional<NodeRole> role_from_string(const std::string& name);

/// True for roles that fly (z > 0 expected), false for terrestrial roles.
inline bool is_airborne(NodeRole role) {
    return role == NodeRole::GatheringUav || role == NodeRole::Leader ||
           role == NodeRole::BackhaulUav;
}

struct Node {
    std::string id;
    NodeRole role = NodeRole::ClusterHead;
    Vec3 position;
    double weight = 1.0; // node weight w_i in the weighted Laplacian
};

/// Propagation and rate parameters. Powers and bandwidths are linear SI
/// units internally (watts, Hz, bits/s); config files may use dBm etc.
struct ChannelParams {
    double alpha_los = 2.05;    // path-loss exponent, air-to-air
    double alpha_nlos = 2.32;   // path-loss exponent, ground-to-air
    double mu_los = 1.2589254117941673;  // 1 dB excess attenuation
    double mu_nlos = 100.0;              // 20 dB excess attenuation
    double carrier_freq = 2.0e9;         // Hz
    double noise_psd = 3.9810717055349725e-21; // W/Hz (-174 dBm/Hz)
    double total_bandwidth = 10.0e6;     // Hz
    double rate_req = 4.0e6;             // bits/s per link
};

struct EnergyParams {
    double node_energy = 20000.0; // J, battery of each UAV/CH
    double circuit_power = 0.1;   // W, constant drain while transmitting
    double jammer_power = 1.0;    // W, per jammer (30 dBm)
};

struct Constraints {
    double h_min = 70.0; // m, leader altitude floor (upper corridor)
    double d_min = 5.0;  // m, inter-UAV safety distance
};

enum class EdgePolicy {
    TwoHopPaired,  // CH i -> UAV i, every UAV -> leader
    TwoHopNearest, // each CH -> nearest UAV, every UAV -> leader
    Full,          // every CH -> every UAV, every UAV -> leader
    BackhaulChain, // leader -> relay_1 -> ... -> relay_k -> BS
};

const char* to_string(EdgePolicy policy);
std::optional<EdgePolicy> edge_policy_from_string(const std::string& name);

/// Complete node roster plus all physical parameters. Immutable value
/// object in practice: optimizers copy it and edit positions on the copy.
struct Scenario {
    std::vector<Node> nodes;
    ChannelParams channel;
    EnergyParams energy;
    Constraints constraints;
    EdgePolicy edge_policy = EdgePolicy::TwoHopPaired;

    // Stage-2 backhaul scenarios override the per-node bandwidth share and
    // the per-link rate requirement; unset means stage-1 rules (B/N, R).
    std::optional<double> bandwidth_share_override; // Hz
    std::optional<double> rate_override;            // bits/s

    std::size_t count(NodeRole role) const;
    std::vector<const Node*> nodes_with_role(NodeRole role) const;
    const Node* find(const std::string& id) const;
    Node* find(const std::string& id);
    const Node* leader() const;

    /// FDMA share B_p = B / N with N the gathering-UAV count, unless
    /// overridden (stage-2 chains keep stage 1's share).
    double bandwidth_share() const;
    /// Per-link minimum rate (R, or N*R for backhaul chains).
    double min_rate() const;
    /// Noise variance sigma^2 = noise_psd * B_p.
    double noise_variance() const;
};

struct Violation {
    std::string code;    // machine-readable, e.g. "multiple-leaders"
    std::string message; // human-readable detail
};

/// Checks every scenario invariant and returns all violations found.
/// Pure and idempotent; an empty result means the scenario is valid.
std::vector<Violation> validate(const Scenario& scenario);

} // namespace uavnet
