#include "uavnet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace uavnet {

SpectralResult eigen_lambda2(const Matrix& lw, const std::vector<double>& node_weights) {
    const std::size_t n = lw.rows();
    if (n < 2) throw std::invalid_argument("eigen_lambda2: need at least two nodes");
    if (node_weights.size() != n)
        throw std::invalid_argument("eigen_lambda2: weight count mismatch");
    const double scale = std::max(lw.max_abs(), 1.0e-300);
    if (lw.asymmetry() > 1.0e-9 * scale)
        throw std::invalid_argument("eigen_lambda2: matrix asymmetric beyond tolerance");

    const EigenDecomposition eig = jacobi_eigh(lw);

    SpectralResult res;
    res.eigenvalues = eig.eigenvalues;
    res.lambda2 = eig.eigenvalues[1];
    res.multiplicity_gap = n > 2 ? eig.eigenvalues[2] - eig.eigenvalues[1] : 0.0;
    res.spectral_scale = std::max(std::abs(eig.eigenvalues.front()),
                                  std::abs(eig.eigenvalues.back()));
    res.degenerate = n > 2 && res.multiplicity_gap < 1.0e-8 * std::max(res.spectral_scale, 1e-300);

    // Kernel direction of L_W for a connected graph is W^(1/2) 1; project it
    // out of the candidate so the Fiedler vector honors the orthogonality
    // invariant even when the kernel is degenerate (disconnected graphs).
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = std::sqrt(node_weights[i]);
    const double un = norm2(u);
    for (auto& v : u) v /= un;

    auto column = [&](std::size_t k) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = eig.eigenvectors(i, k);
        return out;
    };

    std::vector<double> fied = column(1);
    double overlap = dot(fied, u);
    for (std::size_t i = 0; i < n; ++i) fied[i] -= overlap * u[i];
    if (norm2(fied) < 0.5) {
        // The solver mixed the trivial direction into column 1 (possible when
        // lambda1 == lambda2); the complementary kernel vector lives in column 0.
        fied = column(0);
        overlap = dot(fied, u);
        for (std::size_t i = 0; i < n; ++i) fied[i] -= overlap * u[i];
    }
    const double fn = norm2(fied);
    if (fn <= 0.0) throw std::runtime_error("eigen_lambda2: degenerate Fiedler candidate");
    for (auto& v : fied) v /= fn;

    for (std::size_t i = 0; i < n; ++i) {
        if (fied[i] != 0.0) {
            if (fied[i] < 0.0)
                for (auto& v : fied) v = -v;
            break;
        }
    }

    std::vector<double> resid = lw.apply(fied);
    for (std::size_t i = 0; i < n; ++i) resid[i] -= res.lambda2 * fied[i];
    res.residual = norm2(resid);
    res.fiedler = std::move(fied);
    return res;
}

namespace {

bool subset_less(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<std::size_t> mask_to_subset(std::uint32_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) out.push_back(i);
    return out;
}

} // namespace

CheegerCut cheeger_exact(const LifetimeGraph& graph) {
    const std::size_t n = graph.size();
    if (n > 20) throw std::invalid_argument("cheeger_exact: more than 20 nodes");
    if (n < 2) throw std::invalid_argument("cheeger_exact: need at least two nodes");

    CheegerCut best;
    best.h = std::numeric_limits<double>::infinity();

    // Node 0 is pinned to S; each proper bipartition is visited exactly once.
    const std::uint32_t limit = 1u << (n - 1);
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        const std::uint32_t mask = (bits << 1) | 1u;
        if (mask == (1u << n) - 1u) continue; // complement empty

        double cut = 0.0;
        double w_in = 0.0, w_out = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool in_s = mask & (1u << i);
            (in_s ? w_in : w_out) += graph.node_weights[i];
            if (!in_s) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!(mask & (1u << j))) cut += graph.adjacency_sym(i, j);
        }
        const double h = cut / std::min(w_in, w_out);
        if (h < best.h) {
            best.h = h;
            best.subset = mask_to_subset(mask, n);
        } else if (h == best.h) {
            auto cand = mask_to_subset(mask, n);
            if (subset_less(cand, best.subset)) best.subset = std::move(cand);
        }
    }
    return best;
}

CheegerBounds cheeger_bounds_check(const LifetimeGraph& graph) {
    const SpectralResult spec = eigen_lambda2(graph);
    const CheegerCut cut = cheeger_exact(graph);

    CheegerBounds b;
    b.h = cut.h;
    b.lower = std::max(spec.lambda2, 0.0) / 2.0;
    const double w_min = *std::min_element(graph.node_weights.begin(), graph.node_weights.end());
    b.upper = std::sqrt(std::max(
        2.0 * graph.max_generalized_degree() * std::max(spec.lambda2, 0.0) / w_min, 0.0));
    const double eps = 1.0e-9 * std::max({b.h, b.upper, 1.0e-300});
    b.ok = (b.lower - eps <= b.h) && (b.h <= b.upper + eps);
    return b;
}

} // namespace uavnet
