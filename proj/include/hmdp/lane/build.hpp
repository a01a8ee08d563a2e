#pragma once

#include "hmdp/core/model.hpp"
#include "hmdp/lane/baseline.hpp"

namespace hmdp::lane {

/// Assembles the lane-change HMDP: 5 maneuver states, 6 actions, the
/// 5-slot ego continuous state, 4 environment slots per surrounding
/// vehicle, stage costs conditioned on the state only, goal = Cruise,
/// constrained set per safety_admissible.
HmdpModel build_model(const LaneChangeParams& params, const TransitionTable& table,
                      int vehicle_count);

HmdpModel build_model(const LaneChangeParams& params, int vehicle_count);

} // namespace hmdp::lane
