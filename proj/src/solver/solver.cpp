#include "hmdp/solver/solver.hpp"

#include "hmdp/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hmdp {

void SolverConfig::validate() const {
    if (horizon < 1) throw ModelError("solver horizon must be >= 1");
    if (rollout_cap < horizon) throw ModelError("rollout cap must be >= horizon");
    if (tolerance < 0.0) throw ModelError("solver tolerance must be >= 0");
}

double terminal_cost(const HmdpModel& model, const Policy& baseline, const HybridState& h_terminal,
                     int cap) {
    RolloutResult r = rollout(model, baseline, h_terminal, cap);
    if (!r.reached_goal)
        throw BaselineDivergenceError(
            "baseline failed to reach the goal within " + std::to_string(cap) + " steps", cap);
    return r.total_cost;
}

std::optional<double> try_terminal_cost(const HmdpModel& model, const Policy& baseline,
                                        const HybridState& h_terminal, int cap) {
    try {
        return terminal_cost(model, baseline, h_terminal, cap);
    } catch (const BaselineDivergenceError&) {
        return std::nullopt;
    } catch (const FeasibilityError&) {
        return std::nullopt;
    }
}

namespace {

struct SearchState {
    const HmdpModel& model;
    const Policy& baseline;
    const SolverConfig& cfg;
    std::vector<Action> current;
    std::vector<HybridState> states; // states[0] = root, grows with depth
    std::vector<Action> best_actions;
    double best_value = 0.0;
    bool has_best = false;
    int deepest = -1;
};

// Depth-first over admissible actions in ascending id order. The first
// minimal-value completion found is the lexicographically smallest one, so
// ties never replace the incumbent and prefix-cost pruning at `>=` is safe.
void dfs(SearchState& st, int depth, double prefix_cost) {
    st.deepest = std::max(st.deepest, depth);
    if (depth == st.cfg.horizon) {
        auto tail = try_terminal_cost(st.model, st.baseline, st.states.back(), st.cfg.rollout_cap);
        if (!tail) return;
        double value = prefix_cost + *tail;
        if (!st.has_best || value < st.best_value) {
            st.has_best = true;
            st.best_value = value;
            st.best_actions = st.current;
        }
        return;
    }
    const DiscreteState h_s = st.states.back().s;
    const int h_k = st.states.back().k;
    auto [x_next, xi_next] = successor_base(st.model, st.states.back());
    for (int id = 0; id < st.model.action_count; ++id) {
        Action a{id};
        if (!st.model.is_available(h_s, a)) continue;
        DiscreteState s_next = st.model.transition(h_s, a);
        if (!st.model.constrained_set(s_next, x_next, xi_next)) continue;
        double cost = prefix_cost + st.model.stage_cost(h_s, a);
        if (st.cfg.bound_pruning && st.has_best && cost >= st.best_value) continue;
        st.current.push_back(a);
        st.states.push_back(HybridState{s_next, x_next, xi_next, h_k + 1});
        dfs(st, depth + 1, cost);
        st.states.pop_back();
        st.current.pop_back();
    }
}

DecisionPlan assemble_plan(const HmdpModel& model, const Policy& baseline, const HybridState& h,
                           const std::vector<Action>& actions, const SolverConfig& cfg) {
    auto plan = simulate_plan(model, baseline, h, actions, cfg);
    if (!plan) throw ModelError("internal: winning action sequence failed re-simulation");
    return *plan;
}

} // namespace

std::optional<DecisionPlan> simulate_plan(const HmdpModel& model, const Policy& baseline,
                                          const HybridState& h, const std::vector<Action>& actions,
                                          const SolverConfig& cfg) {
    DecisionPlan plan;
    plan.actions = actions;
    HybridState cur = h;
    double stage_sum = 0.0;
    for (Action a : actions) {
        if (!action_admissible(model, cur, a)) return std::nullopt;
        stage_sum += model.stage_cost(cur.s, a);
        cur = step_hybrid(model, cur, a);
        plan.predicted.push_back(cur);
    }
    auto tail = try_terminal_cost(model, baseline, cur, cfg.rollout_cap);
    if (!tail) return std::nullopt;
    plan.terminal_cost = *tail;
    plan.value = stage_sum + *tail;
    return plan;
}

DecisionPlan solve_step(const HmdpModel& model, const Policy& baseline, const HybridState& h,
                        const SolverConfig& cfg) {
    cfg.validate();
    SearchState st{model, baseline, cfg, {}, {h}, {}, 0.0, false, -1};
    st.current.reserve(static_cast<size_t>(cfg.horizon));
    st.states.reserve(static_cast<size_t>(cfg.horizon) + 1);
    dfs(st, 0, 0.0);
    if (!st.has_best)
        throw InfeasibleError("no feasible action sequence of length " +
                                  std::to_string(cfg.horizon) + " from state " +
                                  std::to_string(h.s.id) + " (deepest feasible depth " +
                                  std::to_string(st.deepest) + ")",
                              st.deepest);
    return assemble_plan(model, baseline, h, st.best_actions, cfg);
}

DecisionPlan oracle_solve(const HmdpModel& model, const Policy& baseline, const HybridState& h,
                          const SolverConfig& cfg) {
    cfg.validate();
    std::vector<Action> seq(static_cast<size_t>(cfg.horizon), Action{0});
    std::vector<Action> best;
    double best_value = 0.0;
    bool has_best = false;
    int deepest = -1;

    // Odometer enumeration of all |A|^N_h sequences in lexicographic order.
    while (true) {
        HybridState cur = h;
        double stage_sum = 0.0;
        bool feasible = true;
        int depth = 0;
        for (Action a : seq) {
            if (!action_admissible(model, cur, a)) {
                feasible = false;
                break;
            }
            stage_sum += model.stage_cost(cur.s, a);
            cur = step_hybrid(model, cur, a);
            ++depth;
        }
        deepest = std::max(deepest, depth);
        if (feasible) {
            auto tail = try_terminal_cost(model, baseline, cur, cfg.rollout_cap);
            if (tail) {
                double value = stage_sum + *tail;
                if (!has_best || value < best_value) {
                    has_best = true;
                    best_value = value;
                    best = seq;
                }
            }
        }
        int pos = cfg.horizon - 1;
        while (pos >= 0 && seq[static_cast<size_t>(pos)].id == model.action_count - 1) {
            seq[static_cast<size_t>(pos)] = Action{0};
            --pos;
        }
        if (pos < 0) break;
        ++seq[static_cast<size_t>(pos)].id;
    }

    if (!has_best)
        throw InfeasibleError("oracle: no feasible action sequence of length " +
                                  std::to_string(cfg.horizon) + " (deepest feasible depth " +
                                  std::to_string(deepest) + ")",
                              deepest);
    return assemble_plan(model, baseline, h, best, cfg);
}

DecisionPlan shift_plan(const HmdpModel& model, const Policy& baseline, const DecisionPlan& prev,
                        const HybridState& h_next, const SolverConfig& cfg) {
    if (prev.actions.empty() || prev.predicted.empty())
        throw ModelError("shift_plan requires a non-empty previous plan");
    const HybridState& tail_state = prev.predicted.back();
    Action appended = baseline(tail_state.s, tail_state.x, tail_state.xi);

    std::vector<Action> shifted(prev.actions.begin() + 1, prev.actions.end());
    shifted.push_back(appended);

    auto plan = simulate_plan(model, baseline, h_next, shifted, cfg);
    if (!plan) {
        // Distinguish "the appended baseline action broke it" from a prefix
        // failure: re-simulate just the shifted prefix.
        std::vector<Action> prefix(shifted.begin(), shifted.end() - 1);
        HybridState cur = h_next;
        bool prefix_ok = true;
        for (Action a : prefix) {
            if (!action_admissible(model, cur, a)) {
                prefix_ok = false;
                break;
            }
            cur = step_hybrid(model, cur, a);
        }
        if (prefix_ok && !action_admissible(model, cur, appended))
            throw TheoremViolationError("appended baseline action " + std::to_string(appended.id) +
                                        " inadmissible at the shifted plan tail");
        throw FeasibilityError("shifted plan infeasible at step " + std::to_string(h_next.k),
                               h_next.k);
    }
    return *plan;
}

} // namespace hmdp
