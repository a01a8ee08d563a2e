#pragma once

#include "hmdp/core/model.hpp"
#include "hmdp/lane/safety.hpp"
#include "hmdp/lane/table.hpp"

#include <vector>

namespace hmdp::lane {

/// The rule-based maneuver policy. Deterministic and total; reaches Cruise
/// from every scenario state in finitely many steps. It never reverses a
/// lane change in progress: once in QuickLaneChange it maintains until the
/// path completes, then recovers. While cruising it responds to a slow
/// leader inside the trigger distance by changing lane when the adjacent
/// lane is clear by d_safe, and by braking otherwise; while braking or
/// freshly returned it changes lane as soon as the adjacent lane clears.
ManeuverAction baseline_policy(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                               ManeuverState s, const LaneChangeParams& params,
                               const TransitionTable& table);

ManeuverAction baseline_policy(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                               ManeuverState s, const LaneChangeParams& params);

/// The same rules wrapped as a generic policy over encoded hybrid states.
Policy make_baseline(const LaneChangeParams& params, const TransitionTable& table);

} // namespace hmdp::lane
