#include "uavnet/gradient.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavnet {

double PlacementGradient::inf_norm() const {
    double m = 0.0;
    for (const auto& [id, g] : entries)
        m = std::max({m, std::abs(g.x), std::abs(g.y), std::abs(g.z)});
    return m;
}

EdgePartials edge_weight_partials(const Node& tx, const Node& rx, const Scenario& scenario) {
    EdgePartials out;

    const auto jammers = jammer_positions(scenario);
    const LinkType type = link_type_for(tx.role, rx.role);
    const LinkBudget budget =
        required_power(tx.position, rx.position, type, jammers, scenario);
    if (!budget.feasible) return out; // weight is identically 0, flat everywhere

    const double alpha = pathloss_exponent(type, scenario.channel);
    const double d = budget.distance;
    const double snr_needed =
        std::expm1(scenario.min_rate() / scenario.bandwidth_share() * std::numbers::ln2);
    const double inv_gamma = 1.0 / budget.gamma;
    const double interference = budget.interference_noise;
    const double denom = budget.required_power + scenario.energy.circuit_power;
    const double a = scenario.energy.node_energy / denom;
    // a = E/(P + Pc) with P = C I G^-1 d^alpha, so da = -(a^2/E) dP.
    const double da_dp = -(a * a) / scenario.energy.node_energy;

    const Vec3 sep = tx.position - rx.position;
    const double d_pow = std::pow(d, alpha - 2.0);

    // dP/dtx = C I G^-1 alpha d^(alpha-2) (tx - rx)
    const double tx_coef = snr_needed * interference * inv_gamma * alpha * d_pow;
    out.d_tx = da_dp * tx_coef * sep;

    // dP/drx has the mirrored d_pq term plus the jammer-distance terms of
    // the interference sum (always G2A).
    Vec3 dp_drx = (-1.0) * tx_coef * sep;
    const double gamma_g2a = inverse_pathloss(LinkType::G2A, scenario.channel);
    const double alpha_j = scenario.channel.alpha_nlos;
    Vec3 di_drx{};
    for (const Vec3& j : jammers) {
        const Vec3 r = rx.position - j;
        const double dj = r.norm();
        di_drx += (-alpha_j) * scenario.energy.jammer_power * gamma_g2a *
                  std::pow(dj, -alpha_j - 2.0) * r;
    }
    dp_drx += snr_needed * inv_gamma * std::pow(d, alpha) * di_drx;
    out.d_rx = da_dp * dp_drx;
    return out;
}

PlacementGradient lambda2_gradient(const Scenario& scenario, const LifetimeGraph& graph,
                                   const SpectralResult& spectral,
                                   const std::set<std::string>& movable) {
    PlacementGradient grad;
    grad.degenerate = spectral.degenerate;
    for (const auto& id : movable) grad.entries[id] = Vec3{};

    // y_p = x_p^f / sqrt(w_p)
    std::vector<double> y(graph.size());
    for (std::size_t i = 0; i < graph.size(); ++i)
        y[i] = spectral.fiedler[i] / std::sqrt(graph.node_weights[i]);

    for (const auto& e : graph.edges) {
        if (e.weight <= 0.0) continue;
        const double diff = y[e.tx] - y[e.rx];
        const double coef = 0.5 * diff * diff;
        if (coef == 0.0) continue;

        const Node* tx = scenario.find(graph.node_ids[e.tx]);
        const Node* rx = scenario.find(graph.node_ids[e.rx]);
        const bool tx_movable = movable.count(tx->id) > 0;
        const bool rx_movable = movable.count(rx->id) > 0;
        if (!tx_movable && !rx_movable) continue;

        const EdgePartials partials = edge_weight_partials(*tx, *rx, scenario);
        if (tx_movable) grad.entries[tx->id] += coef * partials.d_tx;
        if (rx_movable) grad.entries[rx->id] += coef * partials.d_rx;
    }
    return grad;
}

PlacementGradient fd_gradient_oracle(const Scenario& scenario,
                                     const std::set<std::string>& movable, double step) {
    if (step <= 0.0) throw std::invalid_argument("fd_gradient_oracle: step must be > 0");

    PlacementGradient grad;
    {
        const SpectralResult base = eigen_lambda2(build_graph(scenario));
        grad.degenerate = base.degenerate;
        grad.reliable = !base.degenerate;
    }

    Scenario work = scenario;
    for (const auto& id : movable) {
        Node* node = work.find(id);
        if (!node) throw std::invalid_argument("fd_gradient_oracle: unknown node '" + id + "'");
        Vec3 g;
        for (int axis = 0; axis < 3; ++axis) {
            const double saved = node->position[axis];
            node->position[axis] = saved + step;
            const double up = eigen_lambda2(build_graph(work)).lambda2;
            node->position[axis] = saved - step;
            const double down = eigen_lambda2(build_graph(work)).lambda2;
            node->position[axis] = saved;
            g[axis] = (up - down) / (2.0 * step);
        }
        grad.entries[id] = g;
    }
    return grad;
}

} // namespace uavnet
