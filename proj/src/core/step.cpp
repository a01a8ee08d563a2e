#include "hmdp/core/step.hpp"

#include "hmdp/core/errors.hpp"

#include <string>

namespace hmdp {

namespace {

void check_indices(const HmdpModel& model, DiscreteState s, Action a) {
    if (s.id < 0 || s.id >= model.state_count)
        throw ModelError("discrete state id " + std::to_string(s.id) + " outside [0, " +
                         std::to_string(model.state_count) + ")");
    if (a.id < 0 || a.id >= model.action_count)
        throw ModelError("action id " + std::to_string(a.id) + " outside [0, " +
                         std::to_string(model.action_count) + ")");
}

void check_dims(const HmdpModel& model, const ContinuousState& x, const EnvironmentState& xi) {
    if (static_cast<int>(x.size()) != model.continuous_dim)
        throw ModelError("continuous state has dimension " + std::to_string(x.size()) +
                         ", model declares " + std::to_string(model.continuous_dim));
    if (static_cast<int>(xi.size()) != model.environment_dim)
        throw ModelError("environment state has dimension " + std::to_string(xi.size()) +
                         ", model declares " + std::to_string(model.environment_dim));
}

} // namespace

DiscreteState transition(const HmdpModel& model, DiscreteState s, Action a) {
    check_indices(model, s, a);
    return model.transition(s, a);
}

ContinuousState step_continuous(const HmdpModel& model, DiscreteState s,
                                const ContinuousState& x, const EnvironmentState& xi) {
    if (s.id < 0 || s.id >= model.state_count)
        throw ModelError("discrete state id out of range in step_continuous");
    check_dims(model, x, xi);
    return model.mode_dynamics(s, x, xi);
}

EnvironmentState step_environment(const HmdpModel& model, const EnvironmentState& xi,
                                  const ContinuousState& x) {
    check_dims(model, x, xi);
    return model.env_dynamics(xi, x);
}

std::pair<ContinuousState, EnvironmentState> successor_base(const HmdpModel& model,
                                                            const HybridState& h) {
    return {step_continuous(model, h.s, h.x, h.xi), step_environment(model, h.xi, h.x)};
}

bool action_admissible(const HmdpModel& model, const HybridState& h, Action a) {
    if (!model.is_available(h.s, a)) return false;
    auto [x_next, xi_next] = successor_base(model, h);
    return model.constrained_set(model.transition(h.s, a), x_next, xi_next);
}

std::vector<Action> admissible_actions(const HmdpModel& model, const HybridState& h) {
    auto [x_next, xi_next] = successor_base(model, h);
    std::vector<Action> out;
    out.reserve(static_cast<size_t>(model.action_count));
    for (int id = 0; id < model.action_count; ++id) {
        Action a{id};
        if (!model.is_available(h.s, a)) continue;
        if (model.constrained_set(model.transition(h.s, a), x_next, xi_next)) out.push_back(a);
    }
    return out;
}

HybridState step_hybrid(const HmdpModel& model, const HybridState& h, Action a) {
    check_indices(model, h.s, a);
    auto [x_next, xi_next] = successor_base(model, h);
    DiscreteState s_next = model.transition(h.s, a);
    if (!model.is_available(h.s, a) || !model.constrained_set(s_next, x_next, xi_next))
        throw FeasibilityError("inadmissible action " + std::to_string(a.id) + " in state " +
                                   std::to_string(h.s.id) + " at step " + std::to_string(h.k),
                               h.k);
    return HybridState{s_next, std::move(x_next), std::move(xi_next), h.k + 1};
}

RolloutResult rollout(const HmdpModel& model, const Policy& policy, const HybridState& h0,
                      int max_steps) {
    if (max_steps < 1) throw ModelError("rollout requires max_steps >= 1");
    RolloutResult result;
    result.final_state = h0;
    for (int i = 0; i < max_steps; ++i) {
        if (model.goal(result.final_state.s)) {
            result.reached_goal = true;
            return result;
        }
        const HybridState& h = result.final_state;
        Action a = policy(h.s, h.x, h.xi);
        double c = model.stage_cost(h.s, a);
        HybridState next = step_hybrid(model, h, a);
        result.steps.push_back(RolloutStep{h, a, c});
        result.total_cost += c;
        result.final_state = std::move(next);
    }
    result.reached_goal = model.goal(result.final_state.s);
    return result;
}

} // namespace hmdp
