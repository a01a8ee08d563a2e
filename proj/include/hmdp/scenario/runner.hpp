#pragma once

#include "hmdp/scenario/config.hpp"
#include "hmdp/solver/monitors.hpp"

#include <optional>

namespace hmdp::scenario {

/// One high-level tick of the trace. Kinematic fields are plant values;
/// maneuver bookkeeping (mode, phase) is the decision layer's.
struct TraceRow {
    double t = 0.0;
    int s_code = 0;  ///< maneuver state at t (before the decision applies)
    int a_code = -1; ///< action decided at t; -1 on the terminal row
    double x_hv = 0.0, v_hv = 0.0, y_hv = 0.0;
    double x_or = 0.0, x_ob = 0.0, v_ob = 0.0, x_og = 0.0;
    double gap_ob = 0.0; ///< |x_hv - x_ob|
    double v_star = 0.0; ///< V*_N(k); NaN when no solve happened
    int feasible_count = 0;
    // monitor flags
    bool shift_feasible = true;    ///< shifted previous plan passed the re-check
    bool constraint_ok = true;     ///< executed successor stayed in the constrained set
    bool value_pair_ok = true;     ///< value-decrease inequality to the next tick
    double y_model = 0.0;          ///< decision-layer lateral reference
    double model_error_x = 0.0;    ///< |plant x - one-step model prediction|
};

struct DecisionEvent {
    double t = 0.0;
    int a_code = 0;
    int s_code = 0; ///< maneuver state the action leads to
};

struct RunReport {
    RunMode mode = RunMode::Hmdp;
    std::vector<DecisionEvent> timeline;
    double min_gap_ob_during_change = 0.0; ///< over low-level samples with mode QLC
    double min_gap_adjacent_during_change = 0.0; ///< min over Ob and Og
    std::optional<double> goal_time; ///< first t at Cruise on the target lane center
    MonitorVerdict lyapunov;
    bool feasibility_ok = true; ///< admissible set nonempty and shifts re-check clean
    std::optional<int> first_feasibility_failure_k;
    bool constraints_respected = true; ///< every executed step stayed in S_{f,x}
    bool tracking_diverged = false;
    double max_model_error_x = 0.0;
    bool root_infeasible = false;
    std::optional<double> root_infeasible_t;
    double wall_seconds = 0.0;
};

struct RunOutput {
    std::vector<TraceRow> rows;
    std::vector<ValueRecord> values; ///< empty in rule mode
    RunReport report;
};

/// Closed loop: a decision every T_h (receding-horizon solve or the rule
/// policy), tracked by the low-level loop at T_l, surrounding vehicles
/// driven by their true acceleration profiles while the decision layer
/// predicts by constant-velocity extrapolation. Root infeasibility ends
/// the run early with the partial trace kept.
RunOutput run_simulation(const ScenarioConfig& cfg);

struct CompareOutput {
    RunOutput hmdp;
    RunOutput rule;
};

/// Runs both modes on the identical plant.
CompareOutput compare(const ScenarioConfig& cfg);

} // namespace hmdp::scenario
