#pragma once

#include "hmdp/core/model.hpp"
#include "hmdp/core/step.hpp"
#include "hmdp/solver/plan.hpp"

#include <optional>

namespace hmdp {

/// Accumulated stage cost of running `baseline` from h_terminal until the
/// goal state. Finite whenever the baseline actually reaches the goal;
/// throws BaselineDivergenceError after `cap` steps otherwise, and
/// FeasibilityError if the baseline picks an inadmissible action.
double terminal_cost(const HmdpModel& model, const Policy& baseline, const HybridState& h_terminal,
                     int cap);

/// terminal_cost that reports failure instead of throwing. A nullopt means
/// the candidate terminal state has no valid baseline continuation and the
/// search treats the leaf as infeasible.
std::optional<double> try_terminal_cost(const HmdpModel& model, const Policy& baseline,
                                        const HybridState& h_terminal, int cap);

/// Receding-horizon solve: depth-first search over the admissible-action
/// tree minimizing sum of stage costs plus the baseline terminal cost.
/// Ties are broken toward the lexicographically smallest action-id
/// sequence. Throws InfeasibleError when no sequence of length
/// cfg.horizon survives the constraints.
DecisionPlan solve_step(const HmdpModel& model, const Policy& baseline, const HybridState& h,
                        const SolverConfig& cfg);

/// Exhaustive reference solver: enumerates all |A|^N_h action sequences
/// without pruning, filters infeasible ones, and applies the same
/// tie-break. Slow on purpose; exists to cross-check solve_step.
DecisionPlan oracle_solve(const HmdpModel& model, const Policy& baseline, const HybridState& h,
                          const SolverConfig& cfg);

/// The candidate plan for step k+1 built from the plan at step k: actions
/// shifted left by one, the baseline action at the previous terminal state
/// appended. Re-simulated and feasibility-checked from h_next. Throws
/// TheoremViolationError if the appended baseline action is inadmissible
/// at its own slot.
DecisionPlan shift_plan(const HmdpModel& model, const Policy& baseline, const DecisionPlan& prev,
                        const HybridState& h_next, const SolverConfig& cfg);

/// Re-simulates `actions` from `h`, checking admissibility at every step.
/// Returns the plan (with value) on success, nullopt on any violation.
std::optional<DecisionPlan> simulate_plan(const HmdpModel& model, const Policy& baseline,
                                          const HybridState& h, const std::vector<Action>& actions,
                                          const SolverConfig& cfg);

} // namespace hmdp
