#include "hmdp/lane/baseline.hpp"

#include <cmath>

namespace hmdp::lane {

namespace {

constexpr double kPhaseEps = 1e-9;

struct Lookahead {
    EgoState ego_next;
    std::vector<PredictedVehicle> vehicles_next;
};

// One step of the same successor configuration the admissibility check
// evaluates: ego under the current mode, vehicles at measured speeds.
Lookahead look_ahead(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                     ManeuverState s, const LaneChangeParams& params) {
    Lookahead la;
    la.ego_next = ego_step(ego, s, params);
    la.vehicles_next = vehicles;
    for (auto& v : la.vehicles_next) v.x += v.v * params.T_h;
    return la;
}

bool action_ok(ManeuverState s, ManeuverAction a, const Lookahead& la,
               const LaneChangeParams& params, const TransitionTable& table) {
    if (!table.defined(s, a)) return false;
    return safety_admissible(la.ego_next, la.vehicles_next, table.next(s, a), params);
}

} // namespace

ManeuverAction baseline_policy(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                               ManeuverState s, const LaneChangeParams& params,
                               const TransitionTable& table) {
    using S = ManeuverState;
    using A = ManeuverAction;
    Lookahead la = look_ahead(ego, vehicles, s, params);

    switch (s) {
        case S::Cruise: {
            if (action_ok(s, A::Maintain, la, params, table)) return A::Maintain;
            // A slow leader inside the trigger distance: change if the
            // adjacent lane is clear, otherwise yield into braking.
            if (action_ok(s, A::Initiate, la, params, table)) return A::Initiate;
            if (action_ok(s, A::Abandon, la, params, table)) return A::Abandon;
            return A::Wait;
        }
        case S::Braking: {
            if (action_ok(s, A::Initiate, la, params, table)) return A::Initiate;
            if (action_ok(s, A::Recover, la, params, table)) return A::Recover;
            return A::Wait;
        }
        case S::QuickLaneChange:
            return ego.phase >= params.t_qlc - kPhaseEps ? A::Recover : A::Maintain;
        case S::Acceleration:
            return A::Recover;
        case S::Return: {
            if (ego.phase > kPhaseEps) return A::Maintain;
            if (action_ok(s, A::Initiate, la, params, table)) return A::Initiate;
            if (action_ok(s, A::Recover, la, params, table)) return A::Recover;
            return A::Wait;
        }
    }
    return A::Maintain;
}

ManeuverAction baseline_policy(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                               ManeuverState s, const LaneChangeParams& params) {
    static const TransitionTable table = TransitionTable::standard();
    return baseline_policy(ego, vehicles, s, params, table);
}

Policy make_baseline(const LaneChangeParams& params, const TransitionTable& table) {
    return [params, table](DiscreteState s, const ContinuousState& x,
                           const EnvironmentState& xi) -> Action {
        ManeuverAction a = baseline_policy(decode_ego(x), decode_vehicles(xi),
                                           state_from_index(s.id), params, table);
        return Action{action_index(a)};
    };
}

} // namespace hmdp::lane
