#pragma once

#include <span>
#include <vector>

#include "uavnet/model.hpp"

namespace uavnet {

/// Propagation class of a link. G2A covers both directions of any link with
/// a terrestrial endpoint; only the endpoint roles matter, not altitudes.
enum class LinkType { A2A, G2A };

inline LinkType link_type_for(NodeRole tx, NodeRole rx) {
    return (is_airborne(tx) && is_airborne(rx)) ? LinkType::A2A : LinkType::G2A;
}

/// Everything needed to describe one directed link at fixed geometry.
struct LinkBudget {
    double gamma = 0.0;              // inverse path-loss coefficient
    double distance = 0.0;           // m
    double interference_noise = 0.0; // W, jamming sum + sigma^2 at the receiver
    double required_power = 0.0;     // W, transmit power to sustain the rate
    bool feasible = true;            // false when 2^(R/B_p) overflows
};

constexpr double kSpeedOfLight = 299792458.0; // m/s

/// Inverse path-loss coefficient: 1/(K_o^a1 mu_los) air-to-air,
/// 1/(K_o^a2 mu_nlos) ground-to-air, with K_o = 4 pi f_c / c.
double inverse_pathloss(LinkType type, const ChannelParams& channel);

/// Path-loss exponent bound to the link type (a1 for A2A, a2 for G2A).
inline double pathloss_exponent(LinkType type, const ChannelParams& channel) {
    return type == LinkType::A2A ? channel.alpha_los : channel.alpha_nlos;
}

/// Jamming-plus-noise power at a receiver: sum_j P_j G_g2a d_j^(-a2) + sigma^2.
/// Jammer links are terrestrial, hence always G2A. Throws if any jammer
/// coincides with the receiver.
double interference_plus_noise(const Vec3& receiver, std::span<const Vec3> jammers,
                               const Scenario& scenario);

/// Transmit power needed to deliver the scenario's per-link rate at the
/// receiver. Marks the budget infeasible when 2^(R/B_p) overflows.
LinkBudget required_power(const Vec3& tx, const Vec3& rx, LinkType type,
                          std::span<const Vec3> jammers, const Scenario& scenario);

/// Shannon rate achieved at the receiver for the given transmit power.
double achieved_rate(double tx_power, const Vec3& tx, const Vec3& rx, LinkType type,
                     std::span<const Vec3> jammers, const Scenario& scenario);

/// Positions of every jammer in the scenario, in roster order.
std::vector<Vec3> jammer_positions(const Scenario& scenario);

} // namespace uavnet
