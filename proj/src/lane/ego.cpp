#include "hmdp/lane/ego.hpp"

#include "hmdp/core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hmdp::lane {

double quintic_shape(double tau) {
    double t3 = tau * tau * tau;
    return 10.0 * t3 - 15.0 * t3 * tau + 6.0 * t3 * tau * tau;
}

double quintic_shape_d1(double tau) {
    double t2 = tau * tau;
    return 30.0 * t2 - 60.0 * t2 * tau + 30.0 * t2 * t2;
}

double quintic_shape_d2(double tau) {
    return 60.0 * tau - 180.0 * tau * tau + 120.0 * tau * tau * tau;
}

double quintic_shape_inverse(double value) {
    if (value <= 0.0) return 0.0;
    if (value >= 1.0) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (quintic_shape(mid) < value)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double lateral_reference(const LaneChangeParams& params, double t_ref, LateralDirection direction,
                         double y_start) {
    if (t_ref < 0.0 || t_ref > params.t_qlc)
        throw ModelError("lateral_reference: t_ref outside [0, t_qlc]");
    if (direction == LateralDirection::Change)
        return params.y_qlc * quintic_shape(t_ref / params.t_qlc);
    double phase_start = params.t_qlc * quintic_shape_inverse(y_start / params.y_qlc);
    double phase = phase_start - t_ref;
    if (phase <= 0.0) return 0.0;
    return params.y_qlc * quintic_shape(phase / params.t_qlc);
}

namespace {

double mode_acceleration(ManeuverState s, const LaneChangeParams& params) {
    switch (s) {
        case ManeuverState::Braking: return params.de;
        case ManeuverState::Acceleration: return params.ac;
        default: return 0.0;
    }
}

} // namespace

EgoState ego_longitudinal_step(const EgoState& ego, ManeuverState s,
                               const LaneChangeParams& params) {
    EgoState next = ego;
    next.x = ego.x + ego.v * params.T_h;
    next.v = std::max(0.0, ego.v + mode_acceleration(s, params) * params.T_h);
    return next;
}

EgoState ego_step(const EgoState& ego, ManeuverState s, const LaneChangeParams& params) {
    EgoState next = ego_longitudinal_step(ego, s, params);
    double c_base = lane_center(params, ego.lane);
    double c_other = lane_center(params, other_lane(ego.lane));
    switch (s) {
        case ManeuverState::QuickLaneChange:
            next.phase = std::min(ego.phase + params.T_h, params.t_qlc);
            next.y = c_base + (c_other - c_base) * quintic_shape(next.phase / params.t_qlc);
            break;
        case ManeuverState::Return:
            next.phase = std::max(ego.phase - params.T_h, 0.0);
            next.y = c_base + (c_other - c_base) * quintic_shape(next.phase / params.t_qlc);
            break;
        default:
            // Lane keeping: no lateral motion. Re-anchor to the lane the
            // ego actually occupies after a completed change.
            next.phase = 0.0;
            next.y = ego.y;
            if (std::abs(ego.y - c_other) <= params.eps_center) next.lane = other_lane(ego.lane);
            break;
    }
    return next;
}

ContinuousState encode_ego(const EgoState& ego) {
    return {ego.x, ego.v, ego.y, ego.phase, ego.lane == LaneTag::Target ? 1.0 : 0.0};
}

EgoState decode_ego(const ContinuousState& x) {
    if (x.size() != 5) throw ModelError("ego continuous state must have 5 slots");
    EgoState ego;
    ego.x = x[0];
    ego.v = x[1];
    ego.y = x[2];
    ego.phase = x[3];
    ego.lane = x[4] > 0.5 ? LaneTag::Target : LaneTag::Original;
    return ego;
}

double lane_center(const LaneChangeParams& params, LaneTag tag) {
    return tag == LaneTag::Original ? params.original_lane_center : params.target_lane_center;
}

LaneTag other_lane(LaneTag tag) {
    return tag == LaneTag::Original ? LaneTag::Target : LaneTag::Original;
}

} // namespace hmdp::lane
