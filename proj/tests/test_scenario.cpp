#include "hmdp/scenario/outputs.hpp"
#include "hmdp/scenario/random_models.hpp"
#include "hmdp/scenario/runner.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <climits>
#include <cstdlib>
#include <sstream>
#include <string>

using namespace hmdp;
using namespace hmdp::scenario;

namespace {

std::string repo_path(const std::string& rel) {
    if (const char* dir = std::getenv("HMDP_SCENARIO_DIR")) {
        std::string candidate = std::string(dir) + "/" + rel.substr(rel.find('/') + 1);
        std::ifstream probe(candidate);
        if (probe) return candidate;
    }
    // tests may also run from the build tree; the sources sit one level up
    for (const std::string prefix : {"../", "../../", ""}) {
        std::ifstream probe(prefix + rel);
        if (probe) return prefix + rel;
    }
    return rel;
}

} // namespace

TEST_CASE("the bundled scenario parses and echoes the published timing") {
    ScenarioConfig cfg = load_scenario(repo_path("scenarios/default.json"));
    CHECK(cfg.solver.horizon == 4);
    CHECK(cfg.params.T_h == 0.4);
    CHECK(cfg.low_level.T_l == 0.1);
    CHECK(cfg.low_level.N_l == 3);
    CHECK(cfg.params.d_safe == 15.0);
    CHECK(cfg.ego.v0 == 25.0);
    // identical behavior to the built-in default
    auto from_file = run_simulation(cfg);
    auto built_in = run_simulation(default_scenario());
    CHECK(trace_csv_text(from_file) == trace_csv_text(built_in));
}

TEST_CASE("configuration validation names the offending field") {
    ScenarioConfig cfg = default_scenario();
    SUBCASE("swapped costs break the ordering") {
        std::swap(cfg.params.c2, cfg.params.c3);
        try {
            cfg.validate();
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("c1<c3<c2<c5<c4") != std::string::npos);
        }
    }
    SUBCASE("duration off the decision grid") {
        cfg.duration = 11.0;
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
    }
    SUBCASE("missing vehicle") {
        cfg.vehicles.pop_back();
        CHECK_THROWS_AS(cfg.validate(), ConfigError);
    }
    SUBCASE("an empty file is a parse error") {
        std::string path = "/tmp/hmdp_empty_scenario.json";
        std::ofstream(path).close();
        CHECK_THROWS_AS((void)load_scenario(path), ConfigError);
        std::remove(path.c_str());
    }
}

TEST_CASE("a 0.4 s run produces exactly one decision row") {
    ScenarioConfig cfg = default_scenario();
    cfg.duration = 0.4;
    auto run = run_simulation(cfg);
    REQUIRE(run.rows.size() == 2); // one decision plus the terminal row
    CHECK(run.rows[0].a_code != -1);
    CHECK(run.rows[1].a_code == -1);
}

TEST_CASE("row count is duration over the decision period plus one") {
    auto run = run_simulation(default_scenario());
    CHECK(run.rows.size() == static_cast<size_t>(default_scenario().high_level_steps()) + 1);
    // strictly increasing time stamps
    for (size_t i = 0; i + 1 < run.rows.size(); ++i) CHECK(run.rows[i].t < run.rows[i + 1].t);
}

TEST_CASE("identical configurations reproduce bit-identical traces") {
    auto a = run_simulation(default_scenario());
    auto b = run_simulation(default_scenario());
    CHECK(trace_csv_text(a) == trace_csv_text(b));
}

TEST_CASE("the trace csv round-trips") {
    auto run = run_simulation(default_scenario());
    std::string text = trace_csv_text(run);
    auto parsed = parse_trace_csv(text);
    REQUIRE(parsed.rows.size() == run.rows.size());
    for (size_t i = 0; i < run.rows.size(); ++i) {
        const auto& a = run.rows[i];
        const auto& b = parsed.rows[i];
        CHECK(a.t == b.t);
        CHECK(a.s_code == b.s_code);
        CHECK(a.a_code == b.a_code);
        CHECK(a.x_hv == b.x_hv);
        CHECK(a.gap_ob == b.gap_ob);
        CHECK((std::isnan(a.v_star) ? std::isnan(b.v_star) : a.v_star == b.v_star));
        CHECK(a.feasible_count == b.feasible_count);
    }
    // replaying the parsed rows reproduces the report's value verdict
    auto replay = replay_lyapunov(parsed, default_scenario().params, 1e-9);
    CHECK(replay.ok == run.report.lyapunov.ok);
    if (!replay.ok) {
        REQUIRE(run.report.lyapunov.first_offending_index.has_value());
        CHECK(*replay.first_offending_index == *run.report.lyapunov.first_offending_index);
    }
}

TEST_CASE("a decision-change event exists wherever the action changes") {
    auto run = run_simulation(default_scenario());
    int previous = INT_MIN;
    size_t event_idx = 0;
    for (const auto& row : run.rows) {
        if (row.a_code == -1) continue;
        if (row.a_code != previous) {
            REQUIRE(event_idx < run.report.timeline.size());
            CHECK(run.report.timeline[event_idx].t == row.t);
            CHECK(run.report.timeline[event_idx].a_code == row.a_code);
            ++event_idx;
            previous = row.a_code;
        }
    }
    CHECK(event_idx == run.report.timeline.size());
}

TEST_CASE("rule mode presses on with the change while the gap collapses") {
    ScenarioConfig cfg = default_scenario();
    cfg.mode = RunMode::Rule;
    auto run = run_simulation(cfg);
    CHECK(run.report.min_gap_ob_during_change < 15.0);
    // the mode stays QuickLaneChange across the rear vehicle's acceleration
    bool stayed = false;
    for (const auto& row : run.rows)
        if (row.t > 1.6 && row.t < 2.5 &&
            row.s_code == static_cast<int>(lane::ManeuverState::QuickLaneChange))
            stayed = true;
    CHECK(stayed);
    CHECK(run.report.goal_time.has_value());
    // the executed steps left the constrained set at least once
    CHECK(!run.report.constraints_respected);
}

TEST_CASE("compare runs both modes on the same plant") {
    auto both = compare(default_scenario());
    CHECK(both.hmdp.report.mode == RunMode::Hmdp);
    CHECK(both.rule.report.mode == RunMode::Rule);
    // never in the change with an adjacent vehicle at or inside d_safe
    for (const auto& row : both.hmdp.rows) {
        if (row.s_code != static_cast<int>(lane::ManeuverState::QuickLaneChange)) continue;
        CHECK(row.gap_ob > 15.0);
        CHECK(std::abs(row.x_hv - row.x_og) > 15.0);
    }
    CHECK(both.rule.report.min_gap_ob_during_change < 15.0);
    REQUIRE(both.hmdp.report.goal_time.has_value());
    REQUIRE(both.rule.report.goal_time.has_value());
    CHECK(*both.hmdp.report.goal_time < 11.0);
    CHECK(*both.rule.report.goal_time < 11.0);
}

TEST_CASE("emitted plot files are (t, value) pairs with strictly increasing t") {
    auto run = run_simulation(default_scenario());
    std::string dir = "/tmp/hmdp_emit_test";
    emit_outputs(run, dir);
    for (const std::string name : {"states.dat", "actions.dat", "lateral.dat", "gap_ob.dat"}) {
        std::ifstream in(dir + "/" + name);
        REQUIRE(in);
        double prev_t = -1.0;
        std::string line;
        int rows = 0;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            double t, value;
            REQUIRE((ls >> t >> value));
            std::string extra;
            CHECK(!(ls >> extra));
            CHECK(t > prev_t);
            prev_t = t;
            ++rows;
        }
        CHECK(rows > 0);
    }
}

TEST_CASE("without the speed surprise both monitors hold end to end") {
    ScenarioConfig cfg = load_scenario(repo_path("scenarios/steady_rear.json"));
    auto run = run_simulation(cfg);
    CHECK(run.report.lyapunov.ok);
    CHECK(run.report.feasibility_ok);
    CHECK(run.report.constraints_respected);
    REQUIRE(run.report.goal_time.has_value());
    CHECK(*run.report.goal_time < 11.0);
    // single clean change: initiate once, never abandon
    int initiates = 0, abandons = 0;
    for (const auto& ev : run.report.timeline) {
        if (ev.a_code == static_cast<int>(lane::ManeuverAction::Initiate)) ++initiates;
        if (ev.a_code == static_cast<int>(lane::ManeuverAction::Abandon)) ++abandons;
    }
    CHECK(initiates == 1);
    CHECK(abandons == 0);
}

TEST_CASE("the shifted plan re-check fails only at the measurement surprise") {
    auto run = run_simulation(default_scenario());
    int failures = 0;
    double failure_t = -1.0;
    for (const auto& row : run.rows)
        if (!row.shift_feasible) {
            ++failures;
            failure_t = row.t;
        }
    CHECK(failures == 1);
    // the tick at which the rear vehicle's speed jump becomes measurable
    CHECK(failure_t == doctest::Approx(1.2));
    // and the value-decrease pair flags the same replanning step
    REQUIRE(run.report.lyapunov.first_offending_index.has_value());
    CHECK(run.values[static_cast<size_t>(*run.report.lyapunov.first_offending_index) + 1].k == 3);
}

TEST_CASE("the model-vs-plant longitudinal error stays inside the envelope") {
    auto run = run_simulation(default_scenario());
    CHECK(run.report.max_model_error_x < 1.0);
    CHECK(!run.report.tracking_diverged);
}

TEST_CASE("oracle_check is deterministic under a fixed seed") {
    auto a = oracle_check(120, 7);
    auto b = oracle_check(120, 7);
    CHECK(a.equivalence_pass == b.equivalence_pass);
    CHECK(a.infeasible_agreed == b.infeasible_agreed);
    CHECK(a.monitor_checked == b.monitor_checked);
    CHECK(a.broken_baseline_detected == b.broken_baseline_detected);
    CHECK(a.ok());
    CHECK(a.broken_baseline_detected > 0);
}

TEST_CASE("parameter overrides rebuild a valid scenario") {
    ScenarioConfig cfg = default_scenario();
    ScenarioConfig wider = with_override(cfg, "/solver/horizon", "3");
    CHECK(wider.solver.horizon == 3);
    ScenarioConfig slower = with_override(cfg, "/vehicles/1/v0", "12");
    CHECK(slower.find_vehicle("Ob")->v0 == 12.0);
    CHECK_THROWS_AS((void)with_override(cfg, "/params/c3", "9"), ConfigError); // breaks ordering
}

TEST_CASE("the scenario JSON text round-trips behaviorally") {
    ScenarioConfig cfg = default_scenario();
    ScenarioConfig reloaded = scenario_from_json_text(scenario_to_json_text(cfg));
    CHECK(trace_csv_text(run_simulation(reloaded)) == trace_csv_text(run_simulation(cfg)));
}

TEST_CASE("a blocked start is surfaced as root infeasibility with a partial trace") {
    ScenarioConfig cfg = default_scenario();
    // leader inside d_safe and the adjacent lane blocked: nothing admissible
    for (auto& v : cfg.vehicles) {
        if (v.id == "Or") v.x0 = 12.0;
        if (v.id == "Ob") {
            v.x0 = -5.0;
            v.v0 = 25.0;
            v.accel_profile = {};
        }
        if (v.id == "Og") v.x0 = 5.0;
    }
    auto run = run_simulation(cfg);
    CHECK(run.report.root_infeasible);
    REQUIRE(run.report.root_infeasible_t.has_value());
    CHECK(*run.report.root_infeasible_t == 0.0);
    CHECK(run.rows.size() == 1); // the partial trace is kept
    CHECK(run.rows[0].feasible_count == 0);
}

TEST_CASE("trace codes stay within the declared ranges") {
    auto run = run_simulation(default_scenario());
    for (const auto& row : run.rows) {
        CHECK(row.s_code >= 1);
        CHECK(row.s_code <= 5);
        if (row.a_code != -1) {
            CHECK(row.a_code >= 6);
            CHECK(row.a_code <= 11);
        }
    }
}

TEST_CASE("output emission reports the failing path") {
    auto run = run_simulation(default_scenario());
    try {
        emit_outputs(run, "/proc/hmdp-cannot-write-here");
        FAIL("expected an I/O error");
    } catch (const std::exception& e) {
        CHECK(std::string(e.what()).find("hmdp-cannot-write-here") != std::string::npos);
    }
}

#ifndef _WIN32
TEST_CASE("command-line exit codes") {
    const char* bin = std::getenv("HMDP_SIM_BIN");
    if (!bin) return; // only run under ctest where the path is provided

    auto run_cmd = [&](const std::string& args) {
        std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WEXITSTATUS(status);
    };

    SUBCASE("a parse failure exits 3") {
        std::string path = "/tmp/hmdp_cli_empty.json";
        std::ofstream(path).close();
        CHECK(run_cmd("run --scenario " + path) == 3);
        std::remove(path.c_str());
    }
    SUBCASE("a run whose monitors trip exits 4") {
        CHECK(run_cmd("run --scenario " + repo_path("scenarios/default.json")) == 4);
    }
    SUBCASE("rule mode completes with exit 0") {
        CHECK(run_cmd("run --mode rule") == 0);
    }
    SUBCASE("oracle-check exits 0 on a clean sweep") {
        CHECK(run_cmd("oracle-check --instances 60 --seed 5") == 0);
    }
    SUBCASE("sweep writes a summary") {
        std::string out = "/tmp/hmdp_cli_sweep";
        CHECK(run_cmd("sweep --param /solver/horizon --values 2 3 --out " + out) == 0);
        std::ifstream summary(out + "/summary.csv");
        CHECK(summary.good());
    }
}
#endif
