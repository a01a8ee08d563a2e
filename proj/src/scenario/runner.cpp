#include "hmdp/scenario/runner.hpp"

#include "hmdp/core/errors.hpp"
#include "hmdp/lane/build.hpp"
#include "hmdp/solver/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace hmdp::scenario {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Plant {
    sim::BicycleState ego;
    std::vector<lane::SurroundingVehicle> vehicles;
    double t = 0.0;
};

Plant make_plant(const ScenarioConfig& cfg) {
    Plant plant;
    plant.ego = sim::BicycleState{cfg.ego.x0, lane::lane_center(cfg.params, cfg.ego.lane_tag), 0.0,
                                  cfg.ego.v0};
    for (const auto& spec : cfg.vehicles)
        plant.vehicles.push_back(lane::SurroundingVehicle{
            spec.id, spec.x0, lane::lane_center(cfg.params, spec.lane_tag), spec.v0,
            spec.accel_profile});
    return plant;
}

std::vector<lane::PredictedVehicle> measure(const Plant& plant) {
    std::vector<lane::PredictedVehicle> out;
    out.reserve(plant.vehicles.size());
    for (const auto& v : plant.vehicles) out.push_back({v.x, v.y, v.v});
    return out;
}

// References under maneuver mode s: longitudinal advance at the tick-entry
// speed with a mode acceleration ramp, matching the decision layer's own
// update rule; lateral positions follow the quintic phase. Points beyond
// one decision period serve as preview for the pure-pursuit aim.
std::vector<sim::ReferencePoint> build_references(const lane::EgoState& ego,
                                                  lane::ManeuverState s,
                                                  const lane::LaneChangeParams& params,
                                                  int substeps, double T_l) {
    std::vector<sim::ReferencePoint> refs;
    refs.reserve(static_cast<size_t>(substeps));
    double c_base = lane::lane_center(params, ego.lane);
    double c_other = lane::lane_center(params, lane::other_lane(ego.lane));
    double accel = 0.0;
    if (s == lane::ManeuverState::Braking) accel = params.de;
    if (s == lane::ManeuverState::Acceleration) accel = params.ac;
    for (int j = 1; j <= substeps; ++j) {
        double tau = j * T_l;
        sim::ReferencePoint ref;
        ref.x = ego.x + ego.v * tau;
        ref.v = std::max(0.0, ego.v + accel * tau);
        double phase = ego.phase;
        if (s == lane::ManeuverState::QuickLaneChange)
            phase = std::min(ego.phase + tau, params.t_qlc);
        else if (s == lane::ManeuverState::Return)
            phase = std::max(ego.phase - tau, 0.0);
        if (s == lane::ManeuverState::QuickLaneChange || s == lane::ManeuverState::Return)
            ref.y = c_base + (c_other - c_base) * lane::quintic_shape(phase / params.t_qlc);
        else
            ref.y = ego.y;
        refs.push_back(ref);
    }
    return refs;
}

double gap_to(const Plant& plant, const std::string& id) {
    for (const auto& v : plant.vehicles)
        if (v.id == id) return std::abs(plant.ego.x - v.x);
    return kNaN;
}

double vehicle_field(const Plant& plant, const std::string& id, bool want_speed) {
    for (const auto& v : plant.vehicles)
        if (v.id == id) return want_speed ? v.v : v.x;
    return kNaN;
}

} // namespace

RunOutput run_simulation(const ScenarioConfig& cfg) {
    cfg.validate();
    auto wall_start = std::chrono::steady_clock::now();

    const lane::LaneChangeParams& params = cfg.params;
    lane::TransitionTable table = lane::TransitionTable::standard();
    HmdpModel model = lane::build_model(params, table, static_cast<int>(cfg.vehicles.size()));
    Policy baseline = lane::make_baseline(params, table);

    Plant plant = make_plant(cfg);
    lane::EgoState ego_belief{cfg.ego.x0, cfg.ego.v0, lane::lane_center(params, cfg.ego.lane_tag),
                              0.0, cfg.ego.lane_tag};
    DiscreteState mode{lane::state_index(lane::ManeuverState::Cruise)};

    RunOutput out;
    out.report.mode = cfg.mode;
    out.report.min_gap_ob_during_change = std::numeric_limits<double>::infinity();
    out.report.min_gap_adjacent_during_change = std::numeric_limits<double>::infinity();

    const int steps = cfg.high_level_steps();
    const int substeps = cfg.substeps_per_decision();
    std::optional<DecisionPlan> prev_plan;

    for (int k = 0; k < steps; ++k) {
        // Measurement: kinematics from the plant, maneuver bookkeeping
        // from the decision layer.
        ego_belief.x = plant.ego.x;
        ego_belief.v = plant.ego.v;
        HybridState h{mode, lane::encode_ego(ego_belief), lane::encode_vehicles(measure(plant)), k};

        TraceRow row;
        row.t = plant.t;
        row.s_code = static_cast<int>(lane::state_from_index(mode.id));
        row.x_hv = plant.ego.x;
        row.v_hv = plant.ego.v;
        row.y_hv = plant.ego.y;
        row.y_model = ego_belief.y;
        row.x_or = vehicle_field(plant, "Or", false);
        row.x_ob = vehicle_field(plant, "Ob", false);
        row.v_ob = vehicle_field(plant, "Ob", true);
        row.x_og = vehicle_field(plant, "Og", false);
        row.gap_ob = gap_to(plant, "Ob");
        row.v_star = kNaN;

        auto admissible = admissible_actions(model, h);
        row.feasible_count = static_cast<int>(admissible.size());
        if (admissible.empty()) {
            out.report.feasibility_ok = false;
            if (!out.report.first_feasibility_failure_k)
                out.report.first_feasibility_failure_k = k;
        }

        // Recursive-feasibility monitor: the shift of the previous plan
        // must survive a re-check against the fresh measurements.
        if (cfg.mode == RunMode::Hmdp && prev_plan) {
            try {
                (void)shift_plan(model, baseline, *prev_plan, h, cfg.solver);
            } catch (const std::runtime_error&) {
                row.shift_feasible = false;
                out.report.feasibility_ok = false;
                if (!out.report.first_feasibility_failure_k)
                    out.report.first_feasibility_failure_k = k;
            }
        }

        // Decide.
        Action a{0};
        if (cfg.mode == RunMode::Hmdp) {
            DecisionPlan plan;
            try {
                plan = solve_step(model, baseline, h, cfg.solver);
            } catch (const InfeasibleError&) {
                out.report.root_infeasible = true;
                out.report.root_infeasible_t = plant.t;
                out.rows.push_back(row);
                break;
            }
            a = plan.actions.front();
            row.v_star = plan.value;
            out.values.push_back(
                ValueRecord{k, plan.value, model.stage_cost(h.s, a)});
            prev_plan = plan;
        } else {
            a = baseline(h.s, h.x, h.xi);
        }
        row.a_code = static_cast<int>(lane::action_from_index(a.id));

        // Execute on the decision layer. The rule policy is applied as-is;
        // constraint violations are recorded, not fatal.
        auto [x_next, xi_next] = successor_base(model, h);
        DiscreteState mode_next = model.transition(h.s, a);
        row.constraint_ok = model.constrained_set(mode_next, x_next, xi_next);
        if (!row.constraint_ok) out.report.constraints_respected = false;
        if (cfg.mode == RunMode::Hmdp && !row.constraint_ok)
            throw ModelError("internal: solver emitted an inadmissible action");

        lane::EgoState ego_pred = lane::decode_ego(x_next);

        // Low level: track this tick's references (plus a preview window
        // for the aim point) while the surrounding vehicles follow their
        // true profiles.
        int preview = substeps + static_cast<int>(std::ceil(1.0 / cfg.low_level.T_l));
        auto refs = build_references(ego_belief, lane::state_from_index(mode.id), params, preview,
                                     cfg.low_level.T_l);
        auto low = sim::low_level_loop(plant.ego, refs, cfg.low_level.geometry,
                                       cfg.low_level.gains, cfg.low_level.bounds, cfg.low_level.T_l,
                                       cfg.low_level.tracking_envelope, substeps);
        if (low.tracking_diverged) out.report.tracking_diverged = true;

        bool in_change = lane::state_from_index(mode.id) == lane::ManeuverState::QuickLaneChange;
        for (int j = 0; j < substeps; ++j) {
            double t_sub = plant.t + j * cfg.low_level.T_l;
            for (auto& v : plant.vehicles) v = lane::surrounding_step(v, t_sub, cfg.low_level.T_l);
            plant.ego = low.states[static_cast<size_t>(j)];
            if (in_change) {
                double gob = gap_to(plant, "Ob");
                double gog = gap_to(plant, "Og");
                out.report.min_gap_ob_during_change =
                    std::min(out.report.min_gap_ob_during_change, gob);
                out.report.min_gap_adjacent_during_change =
                    std::min({out.report.min_gap_adjacent_during_change, gob, gog});
            }
        }
        plant.ego = low.z_end;
        plant.t += params.T_h;

        row.model_error_x = std::abs(plant.ego.x - ego_pred.x);
        out.report.max_model_error_x = std::max(out.report.max_model_error_x, row.model_error_x);
        out.rows.push_back(row);

        // Advance the decision layer; kinematics refresh from the plant
        // at the top of the next tick.
        mode = mode_next;
        ego_belief = ego_pred;
    }

    if (!out.report.root_infeasible) {
        TraceRow final_row;
        final_row.t = plant.t;
        final_row.s_code = static_cast<int>(lane::state_from_index(mode.id));
        final_row.a_code = -1;
        final_row.x_hv = plant.ego.x;
        final_row.v_hv = plant.ego.v;
        final_row.y_hv = plant.ego.y;
        final_row.y_model = ego_belief.y;
        final_row.x_or = vehicle_field(plant, "Or", false);
        final_row.x_ob = vehicle_field(plant, "Ob", false);
        final_row.v_ob = vehicle_field(plant, "Ob", true);
        final_row.x_og = vehicle_field(plant, "Og", false);
        final_row.gap_ob = gap_to(plant, "Ob");
        final_row.v_star = kNaN;
        ego_belief.x = plant.ego.x;
        ego_belief.v = plant.ego.v;
        HybridState h_final{mode, lane::encode_ego(ego_belief),
                            lane::encode_vehicles(measure(plant)), steps};
        final_row.feasible_count = static_cast<int>(admissible_actions(model, h_final).size());
        out.rows.push_back(final_row);
    }

    // Post-run analysis.
    if (cfg.mode == RunMode::Hmdp) {
        out.report.lyapunov = check_lyapunov(out.values, cfg.solver.tolerance);
        for (size_t i = 0; i + 1 < out.values.size(); ++i) {
            double decrease = out.values[i + 1].value - out.values[i].value;
            bool pair_ok =
                decrease <= -out.values[i].executed_stage_cost + cfg.solver.tolerance &&
                !(std::abs(decrease) <= cfg.solver.tolerance &&
                  out.values[i].executed_stage_cost > cfg.solver.tolerance);
            out.rows[i].value_pair_ok = pair_ok;
        }
    }

    int prev_action = std::numeric_limits<int>::min();
    for (const auto& row : out.rows) {
        if (row.a_code == -1) continue;
        if (row.a_code != prev_action) {
            lane::ManeuverState from = static_cast<lane::ManeuverState>(row.s_code);
            lane::ManeuverAction act = static_cast<lane::ManeuverAction>(row.a_code);
            out.report.timeline.push_back(
                DecisionEvent{row.t, row.a_code, static_cast<int>(table.next(from, act))});
            prev_action = row.a_code;
        }
    }

    for (const auto& row : out.rows) {
        bool at_target_center =
            std::abs(row.y_model - params.target_lane_center) <= params.eps_center;
        if (row.s_code == static_cast<int>(lane::ManeuverState::Cruise) && at_target_center) {
            out.report.goal_time = row.t;
            break;
        }
    }

    if (std::isinf(out.report.min_gap_ob_during_change)) {
        out.report.min_gap_ob_during_change = kNaN;
        out.report.min_gap_adjacent_during_change = kNaN;
    }

    out.report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
    return out;
}

CompareOutput compare(const ScenarioConfig& cfg) {
    CompareOutput out;
    ScenarioConfig hmdp_cfg = cfg;
    hmdp_cfg.mode = RunMode::Hmdp;
    ScenarioConfig rule_cfg = cfg;
    rule_cfg.mode = RunMode::Rule;
    out.hmdp = run_simulation(hmdp_cfg);
    out.rule = run_simulation(rule_cfg);
    return out;
}

} // namespace hmdp::scenario
