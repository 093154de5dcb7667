#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uavnet/gradient.hpp"
#include "uavnet/lifetime_graph.hpp"
#include "uavnet/model.hpp"
#include "uavnet/rng.hpp"

namespace uavnet {

enum class LeaderMode { Fixed, Corridor, Free };

const char* to_string(LeaderMode mode);
std::optional<LeaderMode> leader_mode_from_string(const std::string& name);

struct OptimizerConfig {
    double step_size = 1.0;      // m per unit of infinity-norm-normalized gradient
    double backtracking = 0.5;   // step shrink factor on lambda2 decrease
    int max_iterations = 500;
    double grad_tol = 1.0e-6;    // stop when gradient infinity norm falls below
    double min_step = 1.0e-4;    // m; exhausting backtracking ends the run
};

enum class StopReason { GradientTolerance, MaxIterations, StepExhausted, NoIterations };

const char* to_string(StopReason reason);

struct TraceRow {
    int iteration = 0;
    std::map<std::string, Vec3> positions; // movable nodes only
    double lambda2 = 0.0;
    double lifetime = 0.0;
    double grad_norm = 0.0; // infinity norm before normalization
    double step = 0.0;      // accepted step, m (0 for the initial row)
    bool corridor_clamped = false;
    int separation_pushes = 0;
    bool projection_nonconverged = false;
    bool degenerate = false;
};

struct OptimizerTrace {
    std::vector<TraceRow> rows;
    StopReason stop_reason = StopReason::NoIterations;
    bool hit_max_iterations = false;
    int surrogate_gap_events = 0; // iterations where lambda2 rose but lifetime fell
};

struct ProjectionReport {
    bool corridor_clamped = false;
    int separation_pushes = 0;
    bool nonconverged = false;
};

/// Projects positions onto the feasible set: leader altitude floor in
/// Corridor mode, z >= 0 for airborne nodes, and iterative symmetric
/// pushes until every pair in `separation_ids` is at least d_min apart.
ProjectionReport project_constraints(Scenario& scenario,
                                     const std::vector<std::string>& separation_ids,
                                     LeaderMode mode, Rng& rng);

/// Projected gradient ascent on lambda2 over the gathering UAVs (plus the
/// leader unless Fixed). Throws std::invalid_argument when the initial
/// positions violate the constraints.
std::pair<Scenario, OptimizerTrace> optimize_stage1(const Scenario& scenario, LeaderMode mode,
                                                    const OptimizerConfig& config,
                                                    std::uint64_t seed);

struct BackhaulResult {
    Scenario scenario; // leader + relays + BS (+ jammers), chain policy
    OptimizerTrace trace;
};

/// Second-stage placement: k relays on the leader -> BS chain, rate N*R,
/// same ascent over the relay positions. k = 0 evaluates the direct link.
BackhaulResult optimize_stage2_backhaul(const Scenario& stage1, const Vec3& bs_position,
                                        int relays, const OptimizerConfig& config,
                                        std::uint64_t seed);

/// Trace as CSV: one row per movable node per accepted iteration.
void write_trace_csv(const OptimizerTrace& trace, std::ostream& out);

} // namespace uavnet
