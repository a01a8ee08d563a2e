#pragma once

#include "hmdp/lane/ego.hpp"
#include "hmdp/lane/traffic.hpp"

#include <optional>
#include <vector>

namespace hmdp::lane {

/// Is this lateral position within the original lane's strip?
bool on_original_lane(double y, const LaneChangeParams& params);

/// The nearest vehicle ahead of `x` within the given lane strip, if any.
std::optional<PredictedVehicle> leader_on_lane(const std::vector<PredictedVehicle>& vehicles,
                                               double x, double lane_center_y,
                                               const LaneChangeParams& params);

/// May the system occupy maneuver state `s_next` in the configuration
/// (ego, vehicles)? Encodes, for the successor configuration:
///  - entering or staying in QuickLaneChange requires every vehicle in the
///    lane being entered to be strictly farther than d_safe (a gap of
///    exactly d_safe blocks);
///  - lane-keeping states (Cruise, Braking, Acceleration) require the ego
///    to sit on a lane center, and, on the original lane, to keep d_safe
///    to a leader; plain Cruise additionally requires a slower leader to
///    be beyond the trigger distance (it must otherwise respond);
///  - the maneuver states themselves (mid change or return) carry no
///    front-gap condition; the geometry of the quick maneuver covers them.
bool safety_admissible(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                       ManeuverState s_next, const LaneChangeParams& params);

} // namespace hmdp::lane
