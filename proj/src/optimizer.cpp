#include "uavnet/optimizer.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include "uavnet/io.hpp"
#include "uavnet/spectral.hpp"

namespace uavnet {

const char* to_string(LeaderMode mode) {
    switch (mode) {
        case LeaderMode::Fixed: return "fixed";
        case LeaderMode::Corridor: return "corridor";
        case LeaderMode::Free: return "free";
    }
    return "?";
}

std::optional<LeaderMode> leader_mode_from_string(const std::string& name) {
    if (name == "fixed") return LeaderMode::Fixed;
    if (name == "corridor") return LeaderMode::Corridor;
    if (name == "free") return LeaderMode::Free;
    return std::nullopt;
}

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::GradientTolerance: return "gradient_tolerance";
        case StopReason::MaxIterations: return "max_iterations";
        case StopReason::StepExhausted: return "step_exhausted";
        case StopReason::NoIterations: return "no_iterations";
    }
    return "?";
}

ProjectionReport project_constraints(Scenario& scenario,
                                     const std::vector<std::string>& separation_ids,
                                     LeaderMode mode, Rng& rng) {
    ProjectionReport report;
    const double d_min = scenario.constraints.d_min;

    for (auto& node : scenario.nodes) {
        if (node.role == NodeRole::Leader && mode == LeaderMode::Corridor &&
            node.position.z < scenario.constraints.h_min) {
            node.position.z = scenario.constraints.h_min;
            report.corridor_clamped = true;
        }
        if (is_airborne(node.role) && node.position.z < 0.0) node.position.z = 0.0;
    }

    std::vector<Node*> sep;
    sep.reserve(separation_ids.size());
    for (const auto& id : separation_ids) {
        Node* n = scenario.find(id);
        if (!n) throw std::invalid_argument("project_constraints: unknown node '" + id + "'");
        sep.push_back(n);
    }

    bool converged = sep.size() < 2;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        converged = true;
        for (std::size_t i = 0; i < sep.size(); ++i) {
            for (std::size_t j = i + 1; j < sep.size(); ++j) {
                Vec3 diff = sep[i]->position - sep[j]->position;
                double d = diff.norm();
                if (d >= d_min) continue;
                converged = false;
                ++report.separation_pushes;
                Vec3 dir;
                if (d <= 0.0) {
                    // Coincident pair: separate along a random unit direction.
                    const double phi = rng.uniform(0.0, 2.0 * 3.141592653589793);
                    const double cz = rng.uniform(-1.0, 1.0);
                    const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
                    dir = {sz * std::cos(phi), sz * std::sin(phi), cz};
                } else {
                    dir = (1.0 / d) * diff;
                }
                const Vec3 mid = 0.5 * (sep[i]->position + sep[j]->position);
                sep[i]->position = mid + (d_min / 2.0) * dir;
                sep[j]->position = mid - (d_min / 2.0) * dir;
            }
        }
        for (Node* n : sep)
            if (n->position.z < 0.0) n->position.z = 0.0;
    }
    report.nonconverged = !converged;
    return report;
}

namespace {

struct MovableSets {
    std::set<std::string> gradient_ids;        // nodes whose gradient is taken
    std::vector<std::string> separation_ids;   // nodes subject to d_min
};

MovableSets stage1_movable(const Scenario& s, LeaderMode mode) {
    MovableSets m;
    for (const auto& node : s.nodes) {
        if (node.role == NodeRole::GatheringUav) {
            m.gradient_ids.insert(node.id);
            m.separation_ids.push_back(node.id);
        } else if (node.role == NodeRole::Leader && mode != LeaderMode::Fixed) {
            m.gradient_ids.insert(node.id);
        }
    }
    return m;
}

void check_initial_feasibility(const Scenario& s, const std::vector<std::string>& separation_ids,
                               LeaderMode mode) {
    constexpr double slack = 1.0e-9;
    if (mode == LeaderMode::Corridor) {
        const Node* leader = s.leader();
        if (leader && leader->position.z < s.constraints.h_min - slack)
            throw std::invalid_argument("initial leader altitude below h_min");
    }
    for (const auto& node : s.nodes)
        if (is_airborne(node.role) && node.position.z < -slack)
            throw std::invalid_argument("initial altitude of '" + node.id + "' below 0");
    for (std::size_t i = 0; i < separation_ids.size(); ++i) {
        for (std::size_t j = i + 1; j < separation_ids.size(); ++j) {
            const Node* a = s.find(separation_ids[i]);
            const Node* b = s.find(separation_ids[j]);
            if (distance(a->position, b->position) < s.constraints.d_min - slack)
                throw std::invalid_argument("initial positions of '" + a->id + "' and '" + b->id +
                                            "' violate d_min");
        }
    }
}

TraceRow make_row(int iteration, const Scenario& s, const std::set<std::string>& movable,
                  double lambda2, double lifetime, bool degenerate) {
    TraceRow row;
    row.iteration = iteration;
    row.lambda2 = lambda2;
    row.lifetime = lifetime;
    row.degenerate = degenerate;
    for (const auto& id : movable) row.positions[id] = s.find(id)->position;
    return row;
}

/// Shared ascent loop for both stages. The movable/separation sets and the
/// leader mode are the only differences between them.
std::pair<Scenario, OptimizerTrace> ascend(const Scenario& start, const MovableSets& movable,
                                           LeaderMode mode, const OptimizerConfig& config,
                                           std::uint64_t seed) {
    check_initial_feasibility(start, movable.separation_ids, mode);

    Rng rng(seed);
    Scenario current = start;
    LifetimeGraph graph = build_graph(current);
    SpectralResult spec = eigen_lambda2(graph);
    double lifetime = network_lifetime(graph);

    OptimizerTrace trace;
    trace.rows.push_back(
        make_row(0, current, movable.gradient_ids, spec.lambda2, lifetime, spec.degenerate));

    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        const PlacementGradient grad =
            lambda2_gradient(current, graph, spec, movable.gradient_ids);
        const double gnorm = grad.inf_norm();
        if (gnorm < config.grad_tol) {
            trace.stop_reason = StopReason::GradientTolerance;
            return {current, trace};
        }

        bool accepted = false;
        for (double step = config.step_size; step >= config.min_step;
             step *= config.backtracking) {
            Scenario candidate = current;
            for (const auto& id : movable.gradient_ids) {
                Node* node = candidate.find(id);
                node->position += (step / gnorm) * grad.entries.at(id);
            }
            const ProjectionReport proj =
                project_constraints(candidate, movable.separation_ids, mode, rng);
            const LifetimeGraph cand_graph = build_graph(candidate);
            const SpectralResult cand_spec = eigen_lambda2(cand_graph);
            if (cand_spec.lambda2 < spec.lambda2) continue;

            const double cand_lifetime = network_lifetime(cand_graph);
            if (cand_lifetime < lifetime) ++trace.surrogate_gap_events;

            current = std::move(candidate);
            graph = cand_graph;
            spec = cand_spec;
            lifetime = cand_lifetime;

            TraceRow row = make_row(iter, current, movable.gradient_ids, spec.lambda2, lifetime,
                                    spec.degenerate);
            row.grad_norm = gnorm;
            row.step = step;
            row.corridor_clamped = proj.corridor_clamped;
            row.separation_pushes = proj.separation_pushes;
            row.projection_nonconverged = proj.nonconverged;
            trace.rows.push_back(std::move(row));
            accepted = true;
            break;
        }
        if (!accepted) {
            trace.stop_reason = StopReason::StepExhausted;
            return {current, trace};
        }
    }
    trace.stop_reason =
        config.max_iterations == 0 ? StopReason::NoIterations : StopReason::MaxIterations;
    trace.hit_max_iterations = config.max_iterations > 0;
    return {current, trace};
}

} // namespace

std::pair<Scenario, OptimizerTrace> optimize_stage1(const Scenario& scenario, LeaderMode mode,
                                                    const OptimizerConfig& config,
                                                    std::uint64_t seed) {
    return ascend(scenario, stage1_movable(scenario, mode), mode, config, seed);
}

BackhaulResult optimize_stage2_backhaul(const Scenario& stage1, const Vec3& bs_position,
                                        int relays, const OptimizerConfig& config,
                                        std::uint64_t seed) {
    if (relays < 0) throw std::invalid_argument("optimize_stage2_backhaul: negative relay count");
    const Node* leader = stage1.leader();
    if (!leader) throw std::invalid_argument("optimize_stage2_backhaul: scenario has no leader");

    // The chain carries the aggregate of all gathering UAVs: rate N*R on the
    // stage-1 bandwidth share.
    const std::size_t n_uav = stage1.count(NodeRole::GatheringUav);
    Scenario chain;
    chain.channel = stage1.channel;
    chain.energy = stage1.energy;
    chain.constraints = stage1.constraints;
    chain.edge_policy = EdgePolicy::BackhaulChain;
    chain.bandwidth_share_override = stage1.bandwidth_share();
    chain.rate_override = static_cast<double>(std::max<std::size_t>(n_uav, 1)) * stage1.min_rate();

    chain.nodes.push_back({leader->id, NodeRole::Leader, leader->position, leader->weight});
    for (int i = 0; i < relays; ++i) {
        const double t = static_cast<double>(i + 1) / static_cast<double>(relays + 1);
        Vec3 pos = leader->position + t * (bs_position - leader->position);
        if (pos.z < 0.0) pos.z = 0.0;
        chain.nodes.push_back({"relay" + std::to_string(i), NodeRole::BackhaulUav, pos, 1.0});
    }
    chain.nodes.push_back({"bs", NodeRole::BaseStation, {bs_position.x, bs_position.y, 0.0}, 1.0});
    for (const auto& node : stage1.nodes)
        if (node.role == NodeRole::Jammer) chain.nodes.push_back(node);

    BackhaulResult result;
    if (relays == 0) {
        // Direct leader -> BS link; nothing to optimize.
        const LifetimeGraph graph = build_graph(chain);
        const SpectralResult spec = eigen_lambda2(graph);
        result.scenario = chain;
        result.trace.rows.push_back(
            make_row(0, chain, {}, spec.lambda2, network_lifetime(graph), spec.degenerate));
        result.trace.stop_reason = StopReason::NoIterations;
        return result;
    }

    MovableSets movable;
    for (const auto& node : chain.nodes)
        if (node.role == NodeRole::BackhaulUav) {
            movable.gradient_ids.insert(node.id);
            movable.separation_ids.push_back(node.id);
        }
    auto [finalScenario, trace] = ascend(chain, movable, LeaderMode::Fixed, config, seed);
    result.scenario = std::move(finalScenario);
    result.trace = std::move(trace);
    return result;
}

void write_trace_csv(const OptimizerTrace& trace, std::ostream& out) {
    out << "iteration,node_id,x_m,y_m,z_m,lambda2,lifetime_s,step_m\n";
    for (const auto& row : trace.rows) {
        for (const auto& [id, pos] : row.positions) {
            out << row.iteration << ',' << id << ',' << format_double(pos.x) << ','
                << format_double(pos.y) << ',' << format_double(pos.z) << ','
                << format_double(row.lambda2) << ',' << format_double(row.lifetime) << ','
                << format_double(row.step) << '\n';
        }
    }
}

} // namespace uavnet
