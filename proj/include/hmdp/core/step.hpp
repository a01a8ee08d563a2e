#pragma once

#include "hmdp/core/model.hpp"

#include <utility>
#include <vector>

namespace hmdp {

/// One executed step of a rollout: the state it departed from, the action
/// taken, and the stage cost charged for it.
struct RolloutStep {
    HybridState from;
    Action a;
    double cost = 0.0;
};

struct RolloutResult {
    std::vector<RolloutStep> steps;
    HybridState final_state;
    double total_cost = 0.0;
    bool reached_goal = false;
};

/// f(s, a) with bounds checking.
DiscreteState transition(const HmdpModel& model, DiscreteState s, Action a);

/// g~_s(x, xi) with dimension checking.
ContinuousState step_continuous(const HmdpModel& model, DiscreteState s,
                                const ContinuousState& x, const EnvironmentState& xi);

/// g_e(xi, x) with dimension checking.
EnvironmentState step_environment(const HmdpModel& model, const EnvironmentState& xi,
                                  const ContinuousState& x);

/// Successor continuous/environment states of h. Both updates use the
/// pre-transition mode h.s; they do not depend on the chosen action.
std::pair<ContinuousState, EnvironmentState> successor_base(const HmdpModel& model,
                                                            const HybridState& h);

/// Is action `a` admissible at h, i.e. available and landing in S_{f,x}?
bool action_admissible(const HmdpModel& model, const HybridState& h, Action a);

/// Exactly the admissible actions at h, ascending by action id. An empty
/// list is a legal return; callers decide whether that is fatal.
std::vector<Action> admissible_actions(const HmdpModel& model, const HybridState& h);

/// Full hybrid step. Throws FeasibilityError if `a` is inadmissible at h.
HybridState step_hybrid(const HmdpModel& model, const HybridState& h, Action a);

/// Closed-loop rollout under `policy` until goal(s) or max_steps. Every
/// executed action is admissibility-checked; an inadmissible selection
/// raises FeasibilityError with the offending step index.
RolloutResult rollout(const HmdpModel& model, const Policy& policy, const HybridState& h0,
                      int max_steps);

} // namespace hmdp
