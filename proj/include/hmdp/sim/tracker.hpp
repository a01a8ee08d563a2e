#pragma once

#include "hmdp/sim/bicycle.hpp"

#include <vector>

namespace hmdp::sim {

struct ReferencePoint {
    double x = 0.0;
    double y = 0.0;
    double v = 0.0;
};

struct TrackerGains {
    double k_v = 2.0;           ///< proportional speed gain [1/s]
    double lookahead_min = 2.0; ///< pure-pursuit lookahead floor [m]
    double lookahead_gain = 0.5;///< lookahead growth with speed [s]
    double k_heading = 0.35;    ///< damping toward the local path heading
};

/// Proportional speed law plus pure-pursuit steering toward the reference
/// point, both saturated at the input bounds.
ControlInput track_reference(const BicycleState& z, const ReferencePoint& ref,
                             const VehicleGeometry& geom, const TrackerGains& gains,
                             const InputBounds& bounds);

/// As above with a damping term aligning the heading to the local path
/// direction; pass NaN to disable the term.
ControlInput track_reference(const BicycleState& z, const ReferencePoint& ref, double path_heading,
                             const VehicleGeometry& geom, const TrackerGains& gains,
                             const InputBounds& bounds);

struct LowLevelResult {
    BicycleState z_end;
    std::vector<BicycleState> states; ///< state after each tracking tick
    double x_hv = 0.0; ///< ego summary reported back to the high level
    double v_hv = 0.0;
    double y_hv = 0.0;
    double max_lateral_error = 0.0;
    bool tracking_diverged = false;
};

/// Runs one high-level period of tracking ticks at T_l. references[i] is
/// the target pose/speed at the END of tick i; entries beyond `ticks` are
/// preview points used only for aiming. With ticks <= 0 every reference is
/// executed. A lateral error beyond `envelope` is flagged, not fatal.
LowLevelResult low_level_loop(const BicycleState& z0, const std::vector<ReferencePoint>& references,
                              const VehicleGeometry& geom, const TrackerGains& gains,
                              const InputBounds& bounds, double T_l, double envelope,
                              int ticks = 0);

} // namespace hmdp::sim
