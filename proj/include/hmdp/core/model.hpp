#pragma once

#include "hmdp/core/types.hpp"

#include <functional>

namespace hmdp {

/// Hybrid MDP: a finite controlled MDP coupled with autonomous continuous
/// dynamics and an environment process. All callables must be pure; a model
/// may be shared read-only across threads.
///
/// Invariants expected from the domain that builds the model:
///  - stage_cost >= 0 everywhere, and stage_cost(s, a) == 0 for every a
///    exactly when goal(s) holds;
///  - transition is total over state_count x action_count;
///  - mode_dynamics / env_dynamics preserve the declared dimensions.
struct HmdpModel {
    int state_count = 0;
    int action_count = 0;
    int continuous_dim = 0;
    int environment_dim = 0;

    /// f : S x A -> S, deterministic and total.
    std::function<DiscreteState(DiscreteState, Action)> transition;

    /// g~_s : X x E -> X, continuous update under the current mode.
    std::function<ContinuousState(DiscreteState, const ContinuousState&, const EnvironmentState&)>
        mode_dynamics;

    /// g_e : E x X -> E, autonomous environment update.
    std::function<EnvironmentState(const EnvironmentState&, const ContinuousState&)> env_dynamics;

    /// J : S x A -> R>=0.
    std::function<double(DiscreteState, Action)> stage_cost;

    /// Membership in the constrained set S_{f,x}: may the system occupy
    /// discrete state s given continuous/environment states?
    std::function<bool(DiscreteState, const ContinuousState&, const EnvironmentState&)>
        constrained_set;

    /// Goal predicate over discrete states.
    std::function<bool(DiscreteState)> goal;

    /// Which actions exist at all in a given discrete state. Pairs outside
    /// the domain's transition diagram are kept out of the admissible set
    /// even though `transition` maps them (as self-loops) for totality.
    /// Leave unset to make every action available everywhere.
    std::function<bool(DiscreteState, Action)> action_available;

    bool is_available(DiscreteState s, Action a) const {
        return !action_available || action_available(s, a);
    }
};

/// Deterministic policy pi : S x X x E -> A.
using Policy = std::function<Action(DiscreteState, const ContinuousState&, const EnvironmentState&)>;

} // namespace hmdp
