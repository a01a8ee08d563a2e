#pragma once

#include <string>

namespace hmdp::lane {

/// Maneuver states, numbered as published: zeta_1 .. zeta_5.
enum class ManeuverState : int {
    Cruise = 1,
    Braking = 2,
    QuickLaneChange = 3,
    Acceleration = 4,
    Return = 5,
};

/// Maneuver actions, numbered alpha_1 .. alpha_6 as 6..11.
enum class ManeuverAction : int {
    SpeedUp = 6,
    Wait = 7,
    Initiate = 8,
    Recover = 9,
    Abandon = 10,
    Maintain = 11,
};

constexpr int kStateCount = 5;
constexpr int kActionCount = 6;

/// Zero-based indices used by the generic model layer.
inline int state_index(ManeuverState s) { return static_cast<int>(s) - 1; }
inline int action_index(ManeuverAction a) { return static_cast<int>(a) - 6; }
inline ManeuverState state_from_index(int idx) { return static_cast<ManeuverState>(idx + 1); }
inline ManeuverAction action_from_index(int idx) { return static_cast<ManeuverAction>(idx + 6); }

std::string to_string(ManeuverState s);
std::string to_string(ManeuverAction a);

/// Which lane the ego's current maneuver is anchored to.
enum class LaneTag : int { Original = 0, Target = 1 };

struct LaneChangeParams {
    // stage costs per maneuver state, ordered c1..c5
    double c1 = 0.0;
    double c2 = 3.0;
    double c3 = 2.0;
    double c4 = 10.0;
    double c5 = 5.0;

    double d_safe = 15.0;  ///< minimum spacing [m]
    double de = -4.0;      ///< deceleration while braking [m/s^2]
    double ac = 4.0;       ///< acceleration while in Acceleration [m/s^2]
    double t_qlc = 2.0;    ///< lane-change duration [s]
    double y_qlc = 3.8;    ///< lateral offset between lane centers [m]
    double lane_width = 3.8;
    double vehicle_width = 2.5;
    double T_h = 0.4;      ///< high-level sampling time [s]

    double original_lane_center = 0.0;
    double target_lane_center = 3.8;

    /// A slower leader closer than this on the ego's lane makes plain
    /// cruising inadmissible: the decision layer must respond (change,
    /// hold briefly, or brake).
    double trigger_distance = 105.0;

    /// Tolerance for "laterally centered" when entering lane-keeping modes.
    double eps_center = 1e-6;

    double cost(ManeuverState s) const;

    /// Enforces the published constraints: c1 < c3 < c2 < c5 < c4,
    /// de < 0 < ac, t_qlc > 0, positive widths, lane geometry consistent
    /// with y_qlc. Throws ModelError naming the violated relation.
    void validate() const;
};

} // namespace hmdp::lane
