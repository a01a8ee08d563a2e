// Command-line front end: closed-loop lane-change simulation, HMDP vs
// rule-based comparison, randomized solver verification, and parameter
// sweeps.
//
// Exit codes: 0 success, 2 infeasibility at a decision root, 3 bad
// configuration, 4 verification/monitor failure.

#include "hmdp/scenario/outputs.hpp"
#include "hmdp/scenario/random_models.hpp"
#include "hmdp/scenario/runner.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

using namespace hmdp;
using namespace hmdp::scenario;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitConfig = 3;
constexpr int kExitVerification = 4;

ScenarioConfig load_or_default(const std::string& path) {
    if (path.empty()) return default_scenario();
    return load_scenario(path);
}

void print_summary(const RunOutput& run) {
    const RunReport& r = run.report;
    std::cout << "mode: " << to_string(r.mode) << "\n";
    std::cout << "decisions:";
    for (const auto& ev : r.timeline)
        std::cout << " (t=" << ev.t << ", a=" << ev.a_code << ", s=" << ev.s_code << ")";
    std::cout << "\n";
    if (r.goal_time)
        std::cout << "goal reached at t=" << *r.goal_time << " s\n";
    else
        std::cout << "goal not reached within the simulated window\n";
    std::cout << "min adjacent gap during lane change: " << r.min_gap_ob_during_change << " m (Ob)\n";
    std::cout << "lyapunov: " << (r.lyapunov.ok ? "ok" : "VIOLATED " + r.lyapunov.detail) << "\n";
    std::cout << "feasibility: " << (r.feasibility_ok ? "ok" : "VIOLATED") << "\n";
    std::cout << "wall time: " << r.wall_seconds << " s\n";
}

int finish_run(const RunOutput& run, const std::string& out_dir, bool is_rule_mode) {
    if (!out_dir.empty()) emit_outputs(run, out_dir);
    print_summary(run);
    if (run.report.root_infeasible) return kExitInfeasible;
    // The rule-based policy is expected to ignore the constraint layer;
    // monitor verdicts gate only the receding-horizon mode.
    if (!is_rule_mode && (!run.report.lyapunov.ok || !run.report.feasibility_ok))
        return kExitVerification;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hybrid-MDP lane-change decision engine"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir, mode_str = "hmdp";
    auto* run_cmd = app.add_subcommand("run", "simulate one closed loop");
    run_cmd->add_option("--scenario", scenario_path, "scenario JSON (bundled default if omitted)");
    run_cmd->add_option("--mode", mode_str, "hmdp|rule")->check(CLI::IsMember({"hmdp", "rule"}));
    run_cmd->add_option("--out", out_dir, "output directory for trace/report/plot files");

    std::string cmp_scenario, cmp_out;
    auto* cmp_cmd = app.add_subcommand("compare", "run both modes on the identical plant");
    cmp_cmd->add_option("--scenario", cmp_scenario, "scenario JSON");
    cmp_cmd->add_option("--out", cmp_out, "output directory (hmdp/ and rule/ subdirectories)");

    int instances = 1000;
    std::uint64_t seed = 1;
    auto* oracle_cmd = app.add_subcommand("oracle-check",
                                          "randomized solver-vs-oracle and monitor verification");
    oracle_cmd->add_option("--instances", instances, "number of random instances");
    oracle_cmd->add_option("--seed", seed, "RNG seed");

    std::string sweep_scenario, sweep_param, sweep_out;
    std::vector<std::string> sweep_values;
    auto* sweep_cmd = app.add_subcommand("sweep", "re-run the scenario over parameter values");
    sweep_cmd->add_option("--scenario", sweep_scenario, "scenario JSON");
    sweep_cmd->add_option("--param", sweep_param, "JSON pointer, e.g. /solver/horizon")->required();
    sweep_cmd->add_option("--values", sweep_values, "values to apply")->required();
    sweep_cmd->add_option("--out", sweep_out, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            ScenarioConfig cfg = load_or_default(scenario_path);
            cfg.mode = run_mode_from_string(mode_str);
            RunOutput run = run_simulation(cfg);
            return finish_run(run, out_dir, cfg.mode == RunMode::Rule);
        }

        if (cmp_cmd->parsed()) {
            ScenarioConfig cfg = load_or_default(cmp_scenario);
            CompareOutput both = compare(cfg);
            if (!cmp_out.empty()) {
                emit_outputs(both.hmdp, (std::filesystem::path(cmp_out) / "hmdp").string());
                emit_outputs(both.rule, (std::filesystem::path(cmp_out) / "rule").string());
            }
            print_summary(both.hmdp);
            std::cout << "----\n";
            print_summary(both.rule);
            std::cout << "----\n";
            double h_gap = both.hmdp.report.min_gap_adjacent_during_change;
            double r_gap = both.rule.report.min_gap_ob_during_change;
            std::cout << "delta: min change gap hmdp=" << h_gap << " m, rule=" << r_gap << " m\n";
            if (both.hmdp.report.root_infeasible || both.rule.report.root_infeasible)
                return kExitInfeasible;
            return kExitOk;
        }

        if (oracle_cmd->parsed()) {
            OracleCheckStats stats = oracle_check(instances, seed);
            std::cout << "instances: " << stats.instances << "\n"
                      << "equivalence: " << stats.equivalence_pass << " pass, "
                      << stats.equivalence_fail << " fail, " << stats.infeasible_agreed
                      << " infeasible (agreed)\n"
                      << "monitors: " << stats.monitor_checked << " checked, "
                      << stats.monitor_fail << " fail\n"
                      << "broken baselines: " << stats.broken_baseline_detected << " detected, "
                      << stats.broken_baseline_missed << " missed\n";
            if (!stats.ok()) {
                std::cout << "first failure: " << stats.first_failure << "\n";
                return kExitVerification;
            }
            return kExitOk;
        }

        if (sweep_cmd->parsed()) {
            ScenarioConfig base = load_or_default(sweep_scenario);
            std::filesystem::create_directories(sweep_out);
            std::ofstream summary(std::filesystem::path(sweep_out) / "summary.csv");
            summary << "value,goal_time,min_gap_ob_during_change,lyapunov_ok,feasibility_ok,"
                       "wall_seconds\n";
            for (const auto& value : sweep_values) {
                ScenarioConfig cfg = with_override(base, sweep_param, value);
                RunOutput run = run_simulation(cfg);
                emit_outputs(run, (std::filesystem::path(sweep_out) / value).string());
                summary << value << ','
                        << (run.report.goal_time ? std::to_string(*run.report.goal_time) : "nan")
                        << ',' << run.report.min_gap_ob_during_change << ','
                        << (run.report.lyapunov.ok ? 1 : 0) << ','
                        << (run.report.feasibility_ok ? 1 : 0) << ',' << run.report.wall_seconds
                        << '\n';
            }
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
