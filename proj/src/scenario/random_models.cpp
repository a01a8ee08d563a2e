#include "hmdp/scenario/random_models.hpp"

#include "hmdp/core/errors.hpp"
#include "hmdp/core/step.hpp"
#include "hmdp/solver/monitors.hpp"
#include "hmdp/solver/solver.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace hmdp::scenario {

RandomInstance make_random_instance(std::mt19937_64& rng, bool broken_baseline) {
    std::uniform_int_distribution<int> state_dist(2, 6);
    std::uniform_int_distribution<int> action_dist(2, 6);
    std::uniform_int_distribution<int> horizon_dist(1, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    RandomInstance inst;
    int S = state_dist(rng);
    int A = action_dist(rng);
    inst.solver.horizon = horizon_dist(rng);
    inst.solver.rollout_cap = 64;

    // Random transition table, then a forced goal chain: every non-goal
    // state gets one action rewired to a strictly lower-indexed state.
    std::vector<std::vector<int>> table(static_cast<size_t>(S), std::vector<int>(static_cast<size_t>(A)));
    std::vector<std::vector<bool>> available(static_cast<size_t>(S),
                                             std::vector<bool>(static_cast<size_t>(A)));
    for (int s = 0; s < S; ++s)
        for (int a = 0; a < A; ++a) {
            table[static_cast<size_t>(s)][static_cast<size_t>(a)] =
                static_cast<int>(unit(rng) * S) % S;
            available[static_cast<size_t>(s)][static_cast<size_t>(a)] = unit(rng) < 0.8;
        }
    std::vector<int> chain_action(static_cast<size_t>(S), 0);
    for (int s = 1; s < S; ++s) {
        int a = static_cast<int>(unit(rng) * A) % A;
        int parent = static_cast<int>(unit(rng) * s) % s; // strictly below s
        chain_action[static_cast<size_t>(s)] = a;
        table[static_cast<size_t>(s)][static_cast<size_t>(a)] = parent;
        available[static_cast<size_t>(s)][static_cast<size_t>(a)] = true;
    }
    // The goal must be absorbing under the baseline, or the zero terminal
    // cost at goal states understates the true cost-to-go.
    {
        int a0 = static_cast<int>(unit(rng) * A) % A;
        chain_action[0] = a0;
        table[0][static_cast<size_t>(a0)] = 0;
        available[0][static_cast<size_t>(a0)] = true;
    }
    if (broken_baseline && S > 1) {
        // Cut the chain at its top state: the baseline loops forever.
        int s = S - 1;
        table[static_cast<size_t>(s)][static_cast<size_t>(chain_action[static_cast<size_t>(s)])] = s;
        inst.broken_baseline = true;
    }

    // Small discrete costs produce plenty of ties for the tie-break rule.
    std::vector<std::vector<double>> cost(static_cast<size_t>(S), std::vector<double>(static_cast<size_t>(A)));
    for (int s = 1; s < S; ++s)
        for (int a = 0; a < A; ++a)
            cost[static_cast<size_t>(s)][static_cast<size_t>(a)] = 1.0 + std::floor(unit(rng) * 3.0);

    // Broken-baseline instances stay unconstrained so the failure mode is
    // unambiguously a divergence, not a constraint hit.
    inst.constrained = !broken_baseline && unit(rng) < 0.3;
    std::vector<bool> blocked(static_cast<size_t>(S), false);
    if (inst.constrained)
        for (int s = 1; s < S; ++s) blocked[static_cast<size_t>(s)] = unit(rng) < 0.2;

    HmdpModel m;
    m.state_count = S;
    m.action_count = A;
    m.continuous_dim = 1;
    m.environment_dim = 1;
    m.transition = [table](DiscreteState s, Action a) {
        return DiscreteState{table[static_cast<size_t>(s.id)][static_cast<size_t>(a.id)]};
    };
    m.action_available = [available](DiscreteState s, Action a) {
        return available[static_cast<size_t>(s.id)][static_cast<size_t>(a.id)];
    };
    m.mode_dynamics = [](DiscreteState s, const ContinuousState& x, const EnvironmentState&) {
        return ContinuousState{0.9 * x[0] + 0.1 * s.id};
    };
    m.env_dynamics = [](const EnvironmentState& xi, const ContinuousState& x) {
        return EnvironmentState{0.95 * xi[0] + 0.05 * x[0]};
    };
    m.stage_cost = [cost](DiscreteState s, Action a) {
        return cost[static_cast<size_t>(s.id)][static_cast<size_t>(a.id)];
    };
    m.constrained_set = [blocked](DiscreteState s, const ContinuousState&, const EnvironmentState&) {
        return !blocked[static_cast<size_t>(s.id)];
    };
    m.goal = [](DiscreteState s) { return s.id == 0; };
    inst.model = m;

    inst.baseline = [chain_action](DiscreteState s, const ContinuousState&,
                                   const EnvironmentState&) {
        return Action{chain_action[static_cast<size_t>(s.id)]};
    };

    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    inst.root = HybridState{DiscreteState{1 + static_cast<int>(unit(rng) * (S - 1)) % (S - 1)},
                            {coord(rng)},
                            {coord(rng)},
                            0};
    return inst;
}

namespace {

std::string describe(const RandomInstance& inst, int index, const std::string& what) {
    std::ostringstream oss;
    oss << "instance " << index << " (|S|=" << inst.model.state_count
        << ", |A|=" << inst.model.action_count << ", N=" << inst.solver.horizon
        << ", root s=" << inst.root.s.id << (inst.constrained ? ", constrained" : "") << "): "
        << what;
    return oss.str();
}

} // namespace

OracleCheckStats oracle_check(int n_instances, std::uint64_t seed) {
    if (n_instances < 1) throw ModelError("oracle_check requires n_instances >= 1");
    std::mt19937_64 rng(seed);
    OracleCheckStats stats;

    for (int i = 0; i < n_instances; ++i) {
        bool broken = (i % 50) == 49;
        RandomInstance inst = make_random_instance(rng, broken);
        ++stats.instances;

        if (inst.broken_baseline) {
            // The divergence must be surfaced by the terminal-cost rollout
            // from the top of the (cut) chain.
            HybridState top{DiscreteState{inst.model.state_count - 1}, {0.0}, {0.0}, 0};
            try {
                (void)terminal_cost(inst.model, inst.baseline, top, inst.solver.rollout_cap);
                ++stats.broken_baseline_missed;
                if (stats.first_failure.empty())
                    stats.first_failure = describe(inst, i, "divergence not detected");
            } catch (const BaselineDivergenceError&) {
                ++stats.broken_baseline_detected;
            }
            continue;
        }

        // Equivalence of the pruned search against exhaustive enumeration.
        bool solver_infeasible = false, oracle_infeasible = false;
        DecisionPlan fast, slow;
        try {
            fast = solve_step(inst.model, inst.baseline, inst.root, inst.solver);
        } catch (const InfeasibleError&) {
            solver_infeasible = true;
        }
        try {
            slow = oracle_solve(inst.model, inst.baseline, inst.root, inst.solver);
        } catch (const InfeasibleError&) {
            oracle_infeasible = true;
        }
        if (solver_infeasible != oracle_infeasible) {
            ++stats.equivalence_fail;
            if (stats.first_failure.empty())
                stats.first_failure = describe(inst, i, "feasibility disagreement");
            continue;
        }
        if (solver_infeasible) {
            ++stats.infeasible_agreed;
            continue;
        }
        if (fast.value != slow.value || fast.actions.front() != slow.actions.front()) {
            ++stats.equivalence_fail;
            if (stats.first_failure.empty()) {
                std::ostringstream oss;
                oss << "value " << fast.value << " vs " << slow.value << ", first action "
                    << fast.actions.front().id << " vs " << slow.actions.front().id;
                stats.first_failure = describe(inst, i, oss.str());
            }
            continue;
        }
        ++stats.equivalence_pass;

        // Monitors over a short closed loop on unconstrained instances;
        // these models are time-invariant, so both monitors must hold.
        if (!inst.constrained) {
            ++stats.monitor_checked;
            std::vector<ValueRecord> records;
            HybridState h = inst.root;
            DecisionPlan prev = fast;
            bool failed = false;
            records.push_back(ValueRecord{0, fast.value,
                                          inst.model.stage_cost(h.s, fast.actions.front())});
            for (int step = 0; step < 12 && !inst.model.goal(h.s); ++step) {
                h = step_hybrid(inst.model, h, prev.actions.front());
                if (inst.model.goal(h.s)) break;
                DecisionPlan cur;
                try {
                    cur = solve_step(inst.model, inst.baseline, h, inst.solver);
                    DecisionPlan shifted = shift_plan(inst.model, inst.baseline, prev, h, inst.solver);
                    if (shifted.value < cur.value - 1e-9) {
                        failed = true;
                        if (stats.first_failure.empty())
                            stats.first_failure =
                                describe(inst, i, "shifted plan beat the re-solve");
                        break;
                    }
                } catch (const std::runtime_error& e) {
                    failed = true;
                    if (stats.first_failure.empty())
                        stats.first_failure = describe(inst, i, e.what());
                    break;
                }
                records.push_back(ValueRecord{h.k, cur.value,
                                              inst.model.stage_cost(h.s, cur.actions.front())});
                prev = cur;
            }
            if (!failed) {
                MonitorVerdict verdict = check_lyapunov(records, 1e-9);
                if (!verdict.ok) {
                    failed = true;
                    if (stats.first_failure.empty())
                        stats.first_failure = describe(inst, i, "lyapunov: " + verdict.detail);
                }
            }
            if (failed) ++stats.monitor_fail;
        }
    }
    return stats;
}

} // namespace hmdp::scenario
