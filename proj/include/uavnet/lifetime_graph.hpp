#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uavnet/channel.hpp"
#include "uavnet/linalg.hpp"
#include "uavnet/model.hpp"

namespace uavnet {

/// One directed communication edge with its link budget and lifetime weight.
struct GraphEdge {
    std::size_t tx = 0;     // index into LifetimeGraph::node_ids
    std::size_t rx = 0;
    LinkBudget budget;
    double weight = 0.0;    // seconds; 0 when the link is infeasible
};

/// Snapshot of the lifetime-weighted flow graph for one set of positions.
/// Matrices are built from the symmetrized adjacency (A + A^T)/2 so the
/// Laplacian is a proper symmetric PSD operator.
struct LifetimeGraph {
    std::vector<std::string> node_ids; // CHs, UAVs, leader (or chain order)
    std::vector<double> node_weights;  // w_i, same order
    std::vector<GraphEdge> edges;      // directed edges in policy order
    Matrix adjacency;          // directed weights a_pq
    Matrix adjacency_sym;      // (A + A^T)/2
    Matrix degree;             // diag of symmetrized row sums
    Matrix laplacian;          // D - A_sym
    Matrix weighted_laplacian; // W^(-1/2) L W^(-1/2)

    std::size_t size() const { return node_ids.size(); }
    std::size_t index_of(const std::string& id) const;
    double max_generalized_degree() const; // delta_max = max_p beta_p
};

/// Lifetime of the directed link tx -> rx: E_p / (P_pq + P^c_p), or 0 when
/// the required power is infeasible.
double edge_weight(const Node& tx, const Node& rx, const Scenario& scenario);

/// Builds the graph over the roles selected by the policy (CHs/UAVs/leader,
/// or the leader/relays/BS chain) with the policy's edge set.
LifetimeGraph build_graph(const Scenario& scenario, EdgePolicy policy);

inline LifetimeGraph build_graph(const Scenario& scenario) {
    return build_graph(scenario, scenario.edge_policy);
}

/// Network lifetime: min over directed edges of the edge weight.
double network_lifetime(const LifetimeGraph& graph);

/// Edge list as CSV (tx id, rx id, distance, required_power, weight).
void write_edge_csv(const LifetimeGraph& graph, std::ostream& out);

} // namespace uavnet
