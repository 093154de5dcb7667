#include "uavnet/lifetime_graph.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "uavnet/io.hpp"

namespace uavnet {

std::size_t LifetimeGraph::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < node_ids.size(); ++i)
        if (node_ids[i] == id) return i;
    throw std::out_of_range("LifetimeGraph: unknown node id '" + id + "'");
}

double LifetimeGraph::max_generalized_degree() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m = std::max(m, degree(i, i));
    return m;
}

double edge_weight(const Node& tx, const Node& rx, const Scenario& scenario) {
    const auto jammers = jammer_positions(scenario);
    const LinkBudget budget = required_power(tx.position, rx.position,
                                             link_type_for(tx.role, rx.role), jammers, scenario);
    if (!budget.feasible) return 0.0;
    return scenario.energy.node_energy / (budget.required_power + scenario.energy.circuit_power);
}

namespace {

std::vector<const Node*> graph_members(const Scenario& s, EdgePolicy policy) {
    std::vector<const Node*> members;
    if (policy == EdgePolicy::BackhaulChain) {
        for (const auto* n : s.nodes_with_role(NodeRole::Leader)) members.push_back(n);
        for (const auto* n : s.nodes_with_role(NodeRole::BackhaulUav)) members.push_back(n);
        for (const auto* n : s.nodes_with_role(NodeRole::BaseStation)) members.push_back(n);
        return members;
    }
    for (const auto* n : s.nodes_with_role(NodeRole::ClusterHead)) members.push_back(n);
    for (const auto* n : s.nodes_with_role(NodeRole::GatheringUav)) members.push_back(n);
    for (const auto* n : s.nodes_with_role(NodeRole::Leader)) members.push_back(n);
    return members;
}

std::vector<std::pair<std::size_t, std::size_t>> edge_indices(
    const std::vector<const Node*>& members, EdgePolicy policy) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    if (policy == EdgePolicy::BackhaulChain) {
        for (std::size_t i = 0; i + 1 < members.size(); ++i) out.emplace_back(i, i + 1);
        return out;
    }

    std::vector<std::size_t> chs, uavs;
    std::size_t leader = members.size();
    for (std::size_t i = 0; i < members.size(); ++i) {
        switch (members[i]->role) {
            case NodeRole::ClusterHead: chs.push_back(i); break;
            case NodeRole::GatheringUav: uavs.push_back(i); break;
            case NodeRole::Leader: leader = i; break;
            default: break;
        }
    }
    if (leader == members.size())
        throw std::invalid_argument("build_graph: scenario has no leader");

    switch (policy) {
        case EdgePolicy::TwoHopPaired:
            if (chs.size() != uavs.size())
                throw std::invalid_argument("build_graph: two_hop_paired needs equal CH/UAV counts");
            for (std::size_t i = 0; i < chs.size(); ++i) out.emplace_back(chs[i], uavs[i]);
            break;
        case EdgePolicy::TwoHopNearest:
            for (std::size_t c : chs) {
                std::size_t best = uavs.at(0);
                double best_d = std::numeric_limits<double>::infinity();
                for (std::size_t u : uavs) {
                    const double d = distance(members[c]->position, members[u]->position);
                    if (d < best_d) { best_d = d; best = u; }
                }
                out.emplace_back(c, best);
            }
            break;
        case EdgePolicy::Full:
            for (std::size_t c : chs)
                for (std::size_t u : uavs) out.emplace_back(c, u);
            break;
        case EdgePolicy::BackhaulChain: break; // handled above
    }
    for (std::size_t u : uavs) out.emplace_back(u, leader);
    return out;
}

} // namespace

LifetimeGraph build_graph(const Scenario& scenario, EdgePolicy policy) {
    const auto members = graph_members(scenario, policy);
    const std::size_t n = members.size();
    if (n < 2) throw std::invalid_argument("build_graph: fewer than two graph nodes");

    LifetimeGraph g;
    g.node_ids.reserve(n);
    g.node_weights.reserve(n);
    for (const Node* m : members) {
        g.node_ids.push_back(m->id);
        g.node_weights.push_back(m->weight);
    }

    const auto jammers = jammer_positions(scenario);
    g.adjacency = Matrix(n, n);
    for (auto [ti, ri] : edge_indices(members, policy)) {
        const Node& tx = *members[ti];
        const Node& rx = *members[ri];
        if (tx.position == rx.position)
            throw std::invalid_argument("build_graph: edge '" + tx.id + "' -> '" + rx.id +
                                        "' has coincident endpoints");
        GraphEdge e;
        e.tx = ti;
        e.rx = ri;
        e.budget = required_power(tx.position, rx.position, link_type_for(tx.role, rx.role),
                                  jammers, scenario);
        e.weight = e.budget.feasible ? scenario.energy.node_energy /
                                           (e.budget.required_power + scenario.energy.circuit_power)
                                     : 0.0;
        g.adjacency(ti, ri) = e.weight;
        g.edges.push_back(e);
    }

    g.adjacency_sym = Matrix(n, n);
    g.degree = Matrix(n, n);
    g.laplacian = Matrix(n, n);
    g.weighted_laplacian = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.adjacency_sym(i, j) = 0.5 * (g.adjacency(i, j) + g.adjacency(j, i));
    for (std::size_t i = 0; i < n; ++i) {
        double beta = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) beta += g.adjacency_sym(i, j);
        g.degree(i, i) = beta;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.laplacian(i, j) = (i == j ? g.degree(i, i) : 0.0) - g.adjacency_sym(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        const double wi = 1.0 / std::sqrt(g.node_weights[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const double wj = 1.0 / std::sqrt(g.node_weights[j]);
            g.weighted_laplacian(i, j) = wi * g.laplacian(i, j) * wj;
        }
    }
    return g;
}

double network_lifetime(const LifetimeGraph& graph) {
    if (graph.edges.empty()) throw std::invalid_argument("network_lifetime: graph has no edges");
    double m = std::numeric_limits<double>::infinity();
    for (const auto& e : graph.edges) m = std::min(m, e.weight);
    return m;
}

void write_edge_csv(const LifetimeGraph& graph, std::ostream& out) {
    out << "tx_id,rx_id,distance_m,required_power_w,weight_s\n";
    for (const auto& e : graph.edges) {
        out << graph.node_ids[e.tx] << ',' << graph.node_ids[e.rx] << ','
            << format_double(e.budget.distance) << ',' << format_double(e.budget.required_power)
            << ',' << format_double(e.weight) << '\n';
    }
}

} // namespace uavnet
