#include "uavnet/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace uavnet {

double inverse_pathloss(LinkType type, const ChannelParams& channel) {
    const double ko = 4.0 * std::numbers::pi * channel.carrier_freq / kSpeedOfLight;
    if (type == LinkType::A2A)
        return 1.0 / (std::pow(ko, channel.alpha_los) * channel.mu_los);
    return 1.0 / (std::pow(ko, channel.alpha_nlos) * channel.mu_nlos);
}

double interference_plus_noise(const Vec3& receiver, std::span<const Vec3> jammers,
                               const Scenario& scenario) {
    const double gamma_g2a = inverse_pathloss(LinkType::G2A, scenario.channel);
    const double alpha = scenario.channel.alpha_nlos;
    double total = scenario.noise_variance();
    for (const Vec3& j : jammers) {
        const double d = distance(receiver, j);
        if (d <= 0.0)
            throw std::invalid_argument("interference_plus_noise: jammer coincides with receiver");
        total += scenario.energy.jammer_power * gamma_g2a * std::pow(d, -alpha);
    }
    return total;
}

LinkBudget required_power(const Vec3& tx, const Vec3& rx, LinkType type,
                          std::span<const Vec3> jammers, const Scenario& scenario) {
    LinkBudget budget;
    budget.distance = distance(tx, rx);
    if (budget.distance <= 0.0)
        throw std::invalid_argument("required_power: coincident endpoints");
    budget.gamma = inverse_pathloss(type, scenario.channel);
    budget.interference_noise = interference_plus_noise(rx, jammers, scenario);

    // 2^(R/B_p) - 1, via expm1 for accuracy near R = 0.
    const double exponent = scenario.min_rate() / scenario.bandwidth_share();
    const double snr_needed = std::expm1(exponent * std::numbers::ln2);
    const double alpha = pathloss_exponent(type, scenario.channel);
    budget.required_power =
        snr_needed * budget.interference_noise / budget.gamma * std::pow(budget.distance, alpha);
    budget.feasible = std::isfinite(budget.required_power);
    if (!budget.feasible) budget.required_power = std::numeric_limits<double>::infinity();
    return budget;
}

double achieved_rate(double tx_power, const Vec3& tx, const Vec3& rx, LinkType type,
                     std::span<const Vec3> jammers, const Scenario& scenario) {
    const double d = distance(tx, rx);
    if (d <= 0.0) throw std::invalid_argument("achieved_rate: coincident endpoints");
    const double gamma = inverse_pathloss(type, scenario.channel);
    const double alpha = pathloss_exponent(type, scenario.channel);
    const double sinr = tx_power * gamma * std::pow(d, -alpha) /
                        interference_plus_noise(rx, jammers, scenario);
    return scenario.bandwidth_share() * std::log2(1.0 + sinr);
}

std::vector<Vec3> jammer_positions(const Scenario& scenario) {
    std::vector<Vec3> out;
    for (const auto& node : scenario.nodes)
        if (node.role == NodeRole::Jammer) out.push_back(node.position);
    return out;
}

} // namespace uavnet
