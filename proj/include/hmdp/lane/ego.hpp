#pragma once

#include "hmdp/core/types.hpp"
#include "hmdp/lane/params.hpp"

namespace hmdp::lane {

/// High-level ego summary the decision layer plans over.
struct EgoState {
    double x = 0.0;     ///< longitudinal position [m]
    double v = 0.0;     ///< longitudinal speed [m/s]
    double y = 0.0;     ///< lateral position [m]
    double phase = 0.0; ///< time along the lane-change path since it was triggered [s]
    LaneTag lane = LaneTag::Original; ///< lane the current maneuver is anchored to
};

/// Normalized minimum-jerk shape q(tau) = 10 tau^3 - 15 tau^4 + 6 tau^5 and
/// its first two derivatives with respect to tau.
double quintic_shape(double tau);
double quintic_shape_d1(double tau);
double quintic_shape_d2(double tau);

/// Inverse of the shape on [0, 1]; bisection, deterministic.
double quintic_shape_inverse(double value);

enum class LateralDirection { Change, Return };

/// Lateral offset from the maneuver's base lane center.
/// Change: the outbound quintic from 0 to y_qlc over [0, t_qlc].
/// Return: the same quintic traversed back from y_start to 0; the leg of
/// the shape above y_start is skipped, so the duration is the shape time
/// that offset corresponds to.
double lateral_reference(const LaneChangeParams& params, double t_ref, LateralDirection direction,
                         double y_start = 0.0);

/// Longitudinal half of the ego update: x' = x + v T_h, v' = v + a(s) T_h
/// with the mode-dependent acceleration (0 / de / 0 / ac / 0) and a floor
/// at zero speed. Lateral fields are left untouched.
EgoState ego_longitudinal_step(const EgoState& ego, ManeuverState s, const LaneChangeParams& params);

/// Full one-step ego update under mode s: longitudinal step plus maneuver
/// phase and lateral-position bookkeeping (quintic path while changing,
/// backward traversal while returning, lane re-anchoring while cruising).
EgoState ego_step(const EgoState& ego, ManeuverState s, const LaneChangeParams& params);

/// Packing between EgoState and the generic 5-slot continuous state
/// [x, v, y, phase, lane].
ContinuousState encode_ego(const EgoState& ego);
EgoState decode_ego(const ContinuousState& x);

double lane_center(const LaneChangeParams& params, LaneTag tag);
LaneTag other_lane(LaneTag tag);

} // namespace hmdp::lane
