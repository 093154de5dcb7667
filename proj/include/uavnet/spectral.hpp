#pragma once

#include <cstdint>
#include <vector>

#include "uavnet/lifetime_graph.hpp"
#include "uavnet/linalg.hpp"

namespace uavnet {

/// Algebraic connectivity of the weighted Laplacian plus diagnostics.
struct SpectralResult {
    double lambda2 = 0.0;
    std::vector<double> fiedler;  // unit norm, orthogonal to W^(1/2) 1,
                                  // first nonzero component positive
    double residual = 0.0;        // ||L_W x - lambda2 x||
    double multiplicity_gap = 0.0; // lambda3 - lambda2
    double spectral_scale = 0.0;   // max |eigenvalue|
    bool degenerate = false;       // gap below 1e-8 * spectral scale

    std::vector<double> eigenvalues; // full ascending spectrum
};

/// Second-smallest eigenvalue and Fiedler vector of L_W. Throws if L_W is
/// asymmetric beyond 1e-9 of its scale.
SpectralResult eigen_lambda2(const Matrix& weighted_laplacian,
                             const std::vector<double>& node_weights);

inline SpectralResult eigen_lambda2(const LifetimeGraph& graph) {
    return eigen_lambda2(graph.weighted_laplacian, graph.node_weights);
}

struct CheegerCut {
    double h = 0.0;                   // weighted Cheeger constant
    std::vector<std::size_t> subset;  // minimizing S, ascending node indices
};

/// Exact weighted Cheeger constant by enumerating all proper bipartitions
/// of the symmetrized graph. Guarded to n <= 20 nodes.
CheegerCut cheeger_exact(const LifetimeGraph& graph);

struct CheegerBounds {
    double lower = 0.0; // lambda2 / 2
    double h = 0.0;
    double upper = 0.0; // sqrt(2 delta_max lambda2 / w_min)
    bool ok = false;
};

/// Evaluates both sides of the weighted Cheeger inequality against the
/// exact constant.
CheegerBounds cheeger_bounds_check(const LifetimeGraph& graph);

} // namespace uavnet
