#pragma once

#include "hmdp/core/types.hpp"

#include <vector>

namespace hmdp {

struct SolverConfig {
    int horizon = 4;        ///< N_h, prediction horizon in high-level steps
    int rollout_cap = 500;  ///< K_max, cap on baseline rollouts
    double tolerance = 1e-9;
    bool bound_pruning = true; ///< prune prefixes whose cost already meets the incumbent

    void validate() const;
};

/// Result of one receding-horizon solve: the optimal action sequence, its
/// predicted states s*(1;k)..s*(N_h;k), and the optimal value.
struct DecisionPlan {
    std::vector<Action> actions;          ///< a*(0;k) .. a*(N_h-1;k)
    std::vector<HybridState> predicted;   ///< s*(1;k) .. s*(N_h;k), full hybrid states
    double value = 0.0;                   ///< V*_N(k)
    double terminal_cost = 0.0;           ///< the J-bar(s_{N_h}) component of value
};

/// Per-tick record consumed by the Lyapunov monitor.
struct ValueRecord {
    int k = 0;
    double value = 0.0;               ///< V*_N(k)
    double executed_stage_cost = 0.0; ///< J(s*(0;k), a*(0;k))
};

} // namespace hmdp
