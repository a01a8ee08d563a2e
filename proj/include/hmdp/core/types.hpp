#pragma once

#include <cstddef>
#include <vector>

namespace hmdp {

/// Index into the finite MDP state set S.
struct DiscreteState {
    int id = 0;
    friend bool operator==(DiscreteState a, DiscreteState b) { return a.id == b.id; }
    friend bool operator!=(DiscreteState a, DiscreteState b) { return a.id != b.id; }
    friend bool operator<(DiscreteState a, DiscreteState b) { return a.id < b.id; }
};

/// Index into the finite action set A.
struct Action {
    int id = 0;
    friend bool operator==(Action a, Action b) { return a.id == b.id; }
    friend bool operator!=(Action a, Action b) { return a.id != b.id; }
    friend bool operator<(Action a, Action b) { return a.id < b.id; }
};

/// Continuous state of the controlled system, dimension fixed by the domain.
using ContinuousState = std::vector<double>;

/// Environment state (surrounding agents etc.), dimension fixed by the domain.
using EnvironmentState = std::vector<double>;

/// The full hybrid state the planner reasons over: discrete mode, continuous
/// state, environment state, and the high-level step index.
struct HybridState {
    DiscreteState s;
    ContinuousState x;
    EnvironmentState xi;
    int k = 0;

    friend bool operator==(const HybridState& a, const HybridState& b) {
        return a.s == b.s && a.k == b.k && a.x == b.x && a.xi == b.xi;
    }
};

} // namespace hmdp
