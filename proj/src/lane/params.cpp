#include "hmdp/lane/params.hpp"

#include "hmdp/core/errors.hpp"

#include <cmath>

namespace hmdp::lane {

std::string to_string(ManeuverState s) {
    switch (s) {
        case ManeuverState::Cruise: return "Cruise";
        case ManeuverState::Braking: return "Braking";
        case ManeuverState::QuickLaneChange: return "QuickLaneChange";
        case ManeuverState::Acceleration: return "Acceleration";
        case ManeuverState::Return: return "Return";
    }
    return "?";
}

std::string to_string(ManeuverAction a) {
    switch (a) {
        case ManeuverAction::SpeedUp: return "SpeedUp";
        case ManeuverAction::Wait: return "Wait";
        case ManeuverAction::Initiate: return "Initiate";
        case ManeuverAction::Recover: return "Recover";
        case ManeuverAction::Abandon: return "Abandon";
        case ManeuverAction::Maintain: return "Maintain";
    }
    return "?";
}

double LaneChangeParams::cost(ManeuverState s) const {
    switch (s) {
        case ManeuverState::Cruise: return c1;
        case ManeuverState::Braking: return c2;
        case ManeuverState::QuickLaneChange: return c3;
        case ManeuverState::Acceleration: return c4;
        case ManeuverState::Return: return c5;
    }
    return 0.0;
}

void LaneChangeParams::validate() const {
    if (!(c1 < c3 && c3 < c2 && c2 < c5 && c5 < c4))
        throw ModelError("cost ordering violated: require c1<c3<c2<c5<c4");
    if (c1 != 0.0) throw ModelError("c1 must be 0 (zero cost exactly at the goal state)");
    if (!(de < 0.0)) throw ModelError("de must be negative");
    if (!(ac > 0.0)) throw ModelError("ac must be positive");
    if (!(t_qlc > 0.0)) throw ModelError("t_qlc must be positive");
    if (!(T_h > 0.0)) throw ModelError("T_h must be positive");
    if (!(d_safe > 0.0)) throw ModelError("d_safe must be positive");
    if (!(lane_width > 0.0) || !(vehicle_width > 0.0))
        throw ModelError("lane and vehicle widths must be positive");
    if (std::abs(std::abs(target_lane_center - original_lane_center) - y_qlc) > 1e-9)
        throw ModelError("y_qlc must equal the distance between lane centers");
    if (!(trigger_distance >= d_safe))
        throw ModelError("trigger_distance must be >= d_safe");
}

} // namespace hmdp::lane
