#pragma once

#include "hmdp/core/types.hpp"
#include "hmdp/lane/params.hpp"

#include <string>
#include <vector>

namespace hmdp::lane {

/// Piecewise-constant acceleration schedule: a(t) is the entry with the
/// largest start time <= t, zero before the first entry.
struct AccelProfile {
    struct Segment {
        double t_start = 0.0;
        double a = 0.0;
    };
    std::vector<Segment> segments;

    double at(double t) const;
};

struct SurroundingVehicle {
    std::string id;   ///< "Or", "Ob", "Og", ...
    double x = 0.0;   ///< longitudinal position [m]
    double y = 0.0;   ///< lateral position [m], constant over time
    double v = 0.0;   ///< speed [m/s]
    AccelProfile accel_profile;
};

/// Double-integrator advance over dt with a = accel_profile(t); speed is
/// floored at zero, lateral position unchanged.
SurroundingVehicle surrounding_step(const SurroundingVehicle& vehicle, double t, double dt);

struct PredictedVehicle {
    double x = 0.0;
    double y = 0.0;
    double v = 0.0;
};

/// Per-step constant-velocity extrapolation over the prediction horizon:
/// within the horizon the acceleration is taken as zero and each vehicle
/// advances at its currently measured speed. Element [i][j] is vehicle j
/// after i+1 steps of T_h.
std::vector<std::vector<PredictedVehicle>> predict_environment(
    const std::vector<SurroundingVehicle>& vehicles, int horizon, double T_h);

/// Packing between vehicle snapshots and the generic environment vector:
/// four slots [x, y, v, a] per vehicle, acceleration zero in the planner's
/// view of the world.
EnvironmentState encode_vehicles(const std::vector<SurroundingVehicle>& vehicles);
EnvironmentState encode_vehicles(const std::vector<PredictedVehicle>& vehicles);
std::vector<PredictedVehicle> decode_vehicles(const EnvironmentState& xi);

} // namespace hmdp::lane
