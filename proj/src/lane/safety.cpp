#include "hmdp/lane/safety.hpp"

#include <cmath>

namespace hmdp::lane {

bool on_original_lane(double y, const LaneChangeParams& params) {
    return std::abs(y - params.original_lane_center) < 0.5 * params.lane_width;
}

std::optional<PredictedVehicle> leader_on_lane(const std::vector<PredictedVehicle>& vehicles,
                                               double x, double lane_center_y,
                                               const LaneChangeParams& params) {
    std::optional<PredictedVehicle> leader;
    for (const auto& v : vehicles) {
        if (std::abs(v.y - lane_center_y) >= 0.5 * params.lane_width) continue;
        if (v.x < x) continue;
        if (!leader || v.x < leader->x) leader = v;
    }
    return leader;
}

namespace {

bool lane_keeping(ManeuverState s) {
    return s == ManeuverState::Cruise || s == ManeuverState::Braking ||
           s == ManeuverState::Acceleration;
}

} // namespace

bool safety_admissible(const EgoState& ego, const std::vector<PredictedVehicle>& vehicles,
                       ManeuverState s_next, const LaneChangeParams& params) {
    if (s_next == ManeuverState::QuickLaneChange) {
        double entered_center = lane_center(params, other_lane(ego.lane));
        for (const auto& v : vehicles) {
            if (std::abs(v.y - entered_center) >= 0.5 * params.lane_width) continue;
            if (std::abs(ego.x - v.x) <= params.d_safe) return false;
        }
        return true;
    }

    if (lane_keeping(s_next)) {
        double to_original = std::abs(ego.y - params.original_lane_center);
        double to_target = std::abs(ego.y - params.target_lane_center);
        if (std::min(to_original, to_target) > params.eps_center) return false;

        if (on_original_lane(ego.y, params)) {
            auto leader =
                leader_on_lane(vehicles, ego.x, params.original_lane_center, params);
            if (leader) {
                double gap = leader->x - ego.x;
                if (gap < params.d_safe) return false;
                if (s_next == ManeuverState::Cruise && leader->v < ego.v &&
                    gap < params.trigger_distance)
                    return false;
            }
        }
        return true;
    }

    return true; // Return (and mid-maneuver states generally)
}

} // namespace hmdp::lane
