#include "hmdp/lane/build.hpp"

#include "hmdp/core/errors.hpp"

#include <algorithm>

namespace hmdp::lane {

HmdpModel build_model(const LaneChangeParams& params, const TransitionTable& table,
                      int vehicle_count) {
    params.validate();
    if (vehicle_count < 0) throw ModelError("vehicle_count must be >= 0");

    HmdpModel m;
    m.state_count = kStateCount;
    m.action_count = kActionCount;
    m.continuous_dim = 5;
    m.environment_dim = 4 * vehicle_count;

    m.transition = [table](DiscreteState s, Action a) {
        return DiscreteState{state_index(table.next(state_from_index(s.id), action_from_index(a.id)))};
    };
    m.action_available = [table](DiscreteState s, Action a) {
        return table.defined(state_from_index(s.id), action_from_index(a.id));
    };
    m.mode_dynamics = [params](DiscreteState s, const ContinuousState& x,
                               const EnvironmentState&) {
        return encode_ego(ego_step(decode_ego(x), state_from_index(s.id), params));
    };
    m.env_dynamics = [params](const EnvironmentState& xi, const ContinuousState&) {
        EnvironmentState next = xi;
        for (size_t i = 0; i + 3 < next.size(); i += 4) {
            double v = next[i + 2];
            double a = next[i + 3];
            next[i] += v * params.T_h + 0.5 * a * params.T_h * params.T_h;
            next[i + 2] = std::max(0.0, v + a * params.T_h);
        }
        return next;
    };
    m.stage_cost = [params](DiscreteState s, Action) {
        return params.cost(state_from_index(s.id));
    };
    m.constrained_set = [params](DiscreteState s, const ContinuousState& x,
                                 const EnvironmentState& xi) {
        return safety_admissible(decode_ego(x), decode_vehicles(xi), state_from_index(s.id),
                                 params);
    };
    m.goal = [](DiscreteState s) { return state_from_index(s.id) == ManeuverState::Cruise; };
    return m;
}

HmdpModel build_model(const LaneChangeParams& params, int vehicle_count) {
    return build_model(params, TransitionTable::standard(), vehicle_count);
}

} // namespace hmdp::lane
