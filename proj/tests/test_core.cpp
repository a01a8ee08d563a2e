#include "hmdp/core/errors.hpp"
#include "hmdp/core/step.hpp"
#include "hmdp/lane/build.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hmdp;
namespace lane = hmdp::lane;

namespace {

lane::LaneChangeParams test_params() {
    lane::LaneChangeParams p;
    p.validate();
    return p;
}

// Hybrid state for the lane model from plain numbers.
HybridState make_lane_state(const lane::EgoState& ego,
                            const std::vector<lane::PredictedVehicle>& vehicles, int k = 0) {
    return HybridState{DiscreteState{lane::state_index(lane::ManeuverState::Cruise)},
                       lane::encode_ego(ego), lane::encode_vehicles(vehicles), k};
}

std::vector<lane::PredictedVehicle> clear_road() {
    return {{500.0, 0.0, 0.0}, {-500.0, 3.8, 18.0}, {500.0, 3.8, 30.0}};
}

} // namespace

TEST_CASE("transition follows the maneuver table and checks bounds") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);

    DiscreteState cruise{lane::state_index(lane::ManeuverState::Cruise)};
    Action initiate{lane::action_index(lane::ManeuverAction::Initiate)};
    CHECK(transition(model, cruise, initiate).id ==
          lane::state_index(lane::ManeuverState::QuickLaneChange));

    DiscreteState qlc{lane::state_index(lane::ManeuverState::QuickLaneChange)};
    Action abandon{lane::action_index(lane::ManeuverAction::Abandon)};
    CHECK(transition(model, qlc, abandon).id == lane::state_index(lane::ManeuverState::Return));

    // determinism: same query, same answer
    CHECK(transition(model, cruise, initiate) == transition(model, cruise, initiate));

    CHECK_THROWS_AS(transition(model, DiscreteState{7}, initiate), ModelError);
    CHECK_THROWS_AS(transition(model, cruise, Action{-1}), ModelError);
}

TEST_CASE("step_continuous matches the published single-step arithmetic") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);
    EnvironmentState xi = lane::encode_vehicles(clear_road());

    lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
    auto x1 = step_continuous(model, DiscreteState{lane::state_index(lane::ManeuverState::Cruise)},
                              lane::encode_ego(ego), xi);
    CHECK(std::abs(x1[0] - 10.0) < 1e-9);
    CHECK(std::abs(x1[1] - 25.0) < 1e-9);

    auto x2 = step_continuous(model, DiscreteState{lane::state_index(lane::ManeuverState::Braking)},
                              lane::encode_ego(ego), xi);
    CHECK(std::abs(x2[0] - 10.0) < 1e-9);
    CHECK(std::abs(x2[1] - 23.4) < 1e-9);

    CHECK_THROWS_AS(step_continuous(model, DiscreteState{0}, ContinuousState{1.0, 2.0}, xi),
                    ModelError);
}

TEST_CASE("step_continuous agrees with an independently coded copy of the dynamics") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);
    EnvironmentState xi = lane::encode_vehicles(clear_road());

    // hand-rolled duplicate of the mode update, written from the formulas
    auto reference = [&params](int mode_code, lane::EgoState e) {
        double a = 0.0;
        if (mode_code == 2) a = params.de;
        if (mode_code == 4) a = params.ac;
        e.x += e.v * params.T_h;
        e.v = std::max(0.0, e.v + a * params.T_h);
        auto q = [](double tau) {
            return 10 * std::pow(tau, 3) - 15 * std::pow(tau, 4) + 6 * std::pow(tau, 5);
        };
        if (mode_code == 3) {
            e.phase = std::min(e.phase + params.T_h, params.t_qlc);
            e.y = 3.8 * q(e.phase / params.t_qlc);
        } else if (mode_code == 5) {
            e.phase = std::max(e.phase - params.T_h, 0.0);
            e.y = 3.8 * q(e.phase / params.t_qlc);
        } else {
            e.phase = 0.0;
        }
        return e;
    };

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pos(0.0, 100.0), speed(0.0, 35.0), ph(0.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        lane::EgoState ego{pos(rng), speed(rng), 0.0, ph(rng), lane::LaneTag::Original};
        ego.y = 3.8 * lane::quintic_shape(ego.phase / params.t_qlc);
        for (int code = 1; code <= 5; ++code) {
            if (code != 3 && code != 5 && ego.phase != 0.0) continue; // lane-keeping from mid-path not meaningful
            auto got = lane::decode_ego(step_continuous(
                model, DiscreteState{code - 1}, lane::encode_ego(ego), xi));
            auto want = reference(code, ego);
            CHECK(std::abs(got.x - want.x) < 1e-9);
            CHECK(std::abs(got.v - want.v) < 1e-9);
            if (code == 3 || code == 5) {
                CHECK(std::abs(got.y - want.y) < 1e-9);
                CHECK(std::abs(got.phase - want.phase) < 1e-9);
            }
        }
    }
}

TEST_CASE("step_environment advances the double integrator") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 1);

    SUBCASE("constant speed") {
        EnvironmentState xi{100.0, 3.8, 30.0, 0.0};
        auto next = step_environment(model, xi, ContinuousState(5, 0.0));
        CHECK(std::abs(next[0] - 112.0) < 1e-9);
        CHECK(std::abs(next[2] - 30.0) < 1e-9);
        CHECK(next[1] == 3.8);
    }
    SUBCASE("acceleration slot includes the half-a-dt-squared term") {
        EnvironmentState xi{0.0, 3.8, 30.0, 2.0};
        auto next = step_environment(model, xi, ContinuousState(5, 0.0));
        CHECK(std::abs(next[0] - 12.16) < 1e-9);
        CHECK(std::abs(next[2] - 30.8) < 1e-9);
    }
    SUBCASE("zero-dimensional environment is the identity") {
        HmdpModel empty = lane::build_model(params, 0);
        EnvironmentState none;
        CHECK(step_environment(empty, none, ContinuousState(5, 0.0)).empty());
    }
    SUBCASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS(step_environment(model, EnvironmentState{1.0}, ContinuousState(5, 0.0)),
                        ModelError);
    }
}

TEST_CASE("step_hybrid equals the componentwise composition") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);
    lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
    HybridState h = make_lane_state(ego, clear_road());

    Action initiate{lane::action_index(lane::ManeuverAction::Initiate)};
    HybridState next = step_hybrid(model, h, initiate);

    CHECK(next.s == transition(model, h.s, initiate));
    CHECK(next.x == step_continuous(model, h.s, h.x, h.xi));
    CHECK(next.xi == step_environment(model, h.xi, h.x));
    CHECK(next.k == 1);
    CHECK(next.s.id == lane::state_index(lane::ManeuverState::QuickLaneChange));
}

TEST_CASE("step_hybrid rejects an initiation against a close adjacent vehicle") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);
    lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
    // Ob sits 12 m behind on the adjacent lane at matched speed: after one
    // step the successor gap is still 12 <= d_safe.
    std::vector<lane::PredictedVehicle> vehicles{
        {500.0, 0.0, 0.0}, {-12.0, 3.8, 25.0}, {500.0, 3.8, 30.0}};
    HybridState h = make_lane_state(ego, vehicles);

    Action initiate{lane::action_index(lane::ManeuverAction::Initiate)};
    CHECK_THROWS_AS(step_hybrid(model, h, initiate), FeasibilityError);
}

TEST_CASE("admissible_actions") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);

    SUBCASE("fully permissive toy model returns every action in order") {
        HmdpModel toy;
        toy.state_count = 3;
        toy.action_count = 4;
        toy.continuous_dim = 0;
        toy.environment_dim = 0;
        toy.transition = [](DiscreteState s, Action) { return s; };
        toy.mode_dynamics = [](DiscreteState, const ContinuousState& x, const EnvironmentState&) {
            return x;
        };
        toy.env_dynamics = [](const EnvironmentState& xi, const ContinuousState&) { return xi; };
        toy.stage_cost = [](DiscreteState, Action) { return 1.0; };
        toy.constrained_set = [](DiscreteState, const ContinuousState&, const EnvironmentState&) {
            return true;
        };
        toy.goal = [](DiscreteState) { return false; };
        auto actions = admissible_actions(toy, HybridState{DiscreteState{0}, {}, {}, 0});
        REQUIRE(actions.size() == 4);
        for (int i = 0; i < 4; ++i) CHECK(actions[static_cast<size_t>(i)].id == i);

        toy.constrained_set = [](DiscreteState, const ContinuousState&, const EnvironmentState&) {
            return false;
        };
        CHECK(admissible_actions(toy, HybridState{DiscreteState{0}, {}, {}, 0}).empty());
    }

    SUBCASE("a 12 m adjacent gap excludes every action mapping to the lane change") {
        lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
        std::vector<lane::PredictedVehicle> vehicles{
            {500.0, 0.0, 0.0}, {-12.0, 3.8, 25.0}, {500.0, 3.8, 30.0}};
        HybridState h = make_lane_state(ego, vehicles);
        auto actions = admissible_actions(model, h);
        CHECK(!actions.empty());
        for (Action a : actions) {
            CHECK(model.transition(h.s, a).id !=
                  lane::state_index(lane::ManeuverState::QuickLaneChange));
            // every returned action lands inside the constrained set
            CHECK_NOTHROW((void)step_hybrid(model, h, a));
        }
    }
}

TEST_CASE("rollout") {
    auto params = test_params();
    lane::TransitionTable table = lane::TransitionTable::standard();
    HmdpModel model = lane::build_model(params, table, 3);
    Policy baseline = lane::make_baseline(params, table);

    SUBCASE("a start at the goal returns immediately with zero cost") {
        lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
        auto result = rollout(model, baseline, make_lane_state(ego, clear_road()), 50);
        CHECK(result.reached_goal);
        CHECK(result.steps.empty());
        CHECK(result.total_cost == 0.0);
    }

    SUBCASE("baseline completes a lane change from the middle, cost is the sum of stage costs") {
        lane::EgoState ego{0.0, 25.0, 0.0, 0.8, lane::LaneTag::Original};
        ego.y = params.y_qlc * lane::quintic_shape(ego.phase / params.t_qlc);
        HybridState h = make_lane_state(ego, clear_road());
        h.s = DiscreteState{lane::state_index(lane::ManeuverState::QuickLaneChange)};
        auto result = rollout(model, baseline, h, 100);
        CHECK(result.reached_goal);
        double recomputed = 0.0;
        for (const auto& step : result.steps)
            recomputed += params.cost(lane::state_from_index(step.from.s.id));
        CHECK(result.total_cost == recomputed);
        // phases 0.8 -> 2.0 are four charged states (0.8, 1.2, 1.6, 2.0)
        CHECK(result.total_cost == doctest::Approx(4 * params.c3));
    }

    SUBCASE("max_steps=1 from a non-goal state executes exactly one step") {
        lane::EgoState ego{0.0, 25.0, 0.0, 0.4, lane::LaneTag::Original};
        ego.y = params.y_qlc * lane::quintic_shape(0.2);
        HybridState h = make_lane_state(ego, clear_road());
        h.s = DiscreteState{lane::state_index(lane::ManeuverState::QuickLaneChange)};
        auto result = rollout(model, baseline, h, 1);
        CHECK(result.steps.size() == 1);
        CHECK(!result.reached_goal);
        CHECK(result.total_cost == params.c3);
    }

    SUBCASE("a policy that picks an inadmissible action fails with the step index") {
        Policy reckless = [](DiscreteState, const ContinuousState&, const EnvironmentState&) {
            return Action{lane::action_index(lane::ManeuverAction::Initiate)};
        };
        lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
        std::vector<lane::PredictedVehicle> blocked{
            {500.0, 0.0, 0.0}, {-5.0, 3.8, 25.0}, {5.0, 3.8, 25.0}};
        HybridState h = make_lane_state(ego, blocked);
        h.s = DiscreteState{lane::state_index(lane::ManeuverState::Braking)};
        try {
            (void)rollout(model, reckless, h, 10);
            FAIL("expected FeasibilityError");
        } catch (const FeasibilityError& e) {
            CHECK(e.step == 0);
        }
    }

    SUBCASE("cost is additive over a split of the horizon") {
        lane::EgoState ego{0.0, 25.0, 0.0, 0.0, lane::LaneTag::Original};
        std::vector<lane::PredictedVehicle> vehicles{
            {60.0, 0.0, 0.0}, {-500.0, 3.8, 18.0}, {500.0, 3.8, 30.0}};
        HybridState h = make_lane_state(ego, vehicles);
        auto full = rollout(model, baseline, h, 40);
        auto first = rollout(model, baseline, h, 1);
        auto rest = rollout(model, baseline, first.final_state, 39);
        CHECK(full.total_cost == doctest::Approx(first.total_cost + rest.total_cost));
    }
}

TEST_CASE("stage cost is nonnegative and zero exactly at the goal") {
    auto params = test_params();
    HmdpModel model = lane::build_model(params, 3);
    for (int s = 0; s < model.state_count; ++s)
        for (int a = 0; a < model.action_count; ++a) {
            double c = model.stage_cost(DiscreteState{s}, Action{a});
            CHECK(c >= 0.0);
            CHECK((c == 0.0) == model.goal(DiscreteState{s}));
        }
}
