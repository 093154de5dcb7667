#pragma once

#include <map>
#include <set>
#include <string>

#include "uavnet/lifetime_graph.hpp"
#include "uavnet/spectral.hpp"

namespace uavnet {

/// Spatial gradient of lambda2 per movable node. Nodes outside the movable
/// set carry an exact zero entry.
struct PlacementGradient {
    std::map<std::string, Vec3> entries;
    bool degenerate = false; // lambda2 eigenvalue nearly multiple
    bool reliable = true;    // finite-difference oracle only

    Vec3 at(const std::string& id) const {
        auto it = entries.find(id);
        return it == entries.end() ? Vec3{} : it->second;
    }
    double inf_norm() const;
};

/// Chain-rule derivatives of one edge weight with respect to the transmitter
/// and receiver positions. The transmitter moves only d_pq; the receiver
/// moves d_pq and every jammer distance inside the interference sum.
struct EdgePartials {
    Vec3 d_tx;
    Vec3 d_rx;
};

EdgePartials edge_weight_partials(const Node& tx, const Node& rx, const Scenario& scenario);

/// Assembles d lambda2 / d position over the movable set:
/// sum over directed edges of 1/2 (x_p^f/sqrt(w_p) - x_q^f/sqrt(w_q))^2 da_pq,
/// the 1/2 matching the (A + A^T)/2 symmetrization.
PlacementGradient lambda2_gradient(const Scenario& scenario, const LifetimeGraph& graph,
                                   const SpectralResult& spectral,
                                   const std::set<std::string>& movable);

/// Central-difference gradient of eigen_lambda2 over full graph rebuilds.
/// Validation oracle for the analytic gradient; flagged unreliable when
/// lambda2 is degenerate at the base point.
PlacementGradient fd_gradient_oracle(const Scenario& scenario,
                                     const std::set<std::string>& movable, double step);

} // namespace uavnet
