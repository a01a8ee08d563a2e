#pragma once

namespace hmdp::sim {

/// Kinematic bicycle state z = [x, y, theta, v]; (x, y) is the rear-axle
/// center, theta the heading, v the forward speed.
struct BicycleState {
    double x = 0.0;
    double y = 0.0;
    double theta = 0.0;
    double v = 0.0;
};

/// u = [delta, a]: front steering angle and longitudinal acceleration.
struct ControlInput {
    double delta = 0.0;
    double a = 0.0;
};

struct VehicleGeometry {
    double wheelbase = 2.7; ///< front-to-rear axle distance [m]
};

struct InputBounds {
    double delta_max = 0.5; ///< |delta| bound [rad]
    double a_min = -6.0;
    double a_max = 4.0;
};

/// Classical fourth-order fixed-step integration of
///   x' = v cos(theta), y' = v sin(theta), theta' = v tan(delta)/l, v' = a
/// over dt. Speed is floored at zero and theta normalized to (-pi, pi].
BicycleState integrate_bicycle(const BicycleState& z, const ControlInput& u,
                               const VehicleGeometry& geom, double dt);

double normalize_angle(double theta);

} // namespace hmdp::sim
