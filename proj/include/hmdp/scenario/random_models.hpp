#pragma once

#include "hmdp/core/model.hpp"
#include "hmdp/solver/plan.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace hmdp::scenario {

/// A small randomized HMDP with a baseline constructed from a forced
/// goal-reaching action chain (every non-goal state carries one action
/// wired toward a lower-indexed state, so the chain terminates at the
/// goal, state 0).
struct RandomInstance {
    HmdpModel model;
    Policy baseline;
    HybridState root;
    SolverConfig solver;
    bool constrained = false;      ///< has state blocks (equivalence check only)
    bool broken_baseline = false;  ///< goal chain deliberately cut
};

RandomInstance make_random_instance(std::mt19937_64& rng, bool broken_baseline);

struct OracleCheckStats {
    int instances = 0;
    int equivalence_pass = 0;
    int equivalence_fail = 0;
    int infeasible_agreed = 0;
    int broken_baseline_detected = 0;
    int broken_baseline_missed = 0;
    int monitor_checked = 0;
    int monitor_fail = 0;
    std::string first_failure;

    bool ok() const {
        return equivalence_fail == 0 && monitor_fail == 0 && broken_baseline_missed == 0;
    }
};

/// Seeded verification sweep: per instance asserts solve_step/oracle_solve
/// equivalence (value and first action), and on unconstrained instances
/// runs a short closed loop checking the value-decrease and
/// shifted-plan-feasibility monitors. Every 50th instance carries a broken
/// baseline and must surface a divergence error.
OracleCheckStats oracle_check(int n_instances, std::uint64_t seed);

} // namespace hmdp::scenario
