#include "hmdp/sim/bicycle.hpp"

#include "hmdp/core/errors.hpp"

#include <algorithm>
#include <cmath>

namespace hmdp::sim {

double normalize_angle(double theta) {
    while (theta > M_PI) theta -= 2.0 * M_PI;
    while (theta <= -M_PI) theta += 2.0 * M_PI;
    return theta;
}

namespace {

struct Deriv {
    double dx, dy, dtheta, dv;
};

Deriv f(const BicycleState& z, const ControlInput& u, const VehicleGeometry& geom) {
    return Deriv{z.v * std::cos(z.theta), z.v * std::sin(z.theta),
                 z.v * std::tan(u.delta) / geom.wheelbase, u.a};
}

BicycleState advance(const BicycleState& z, const Deriv& d, double h) {
    return BicycleState{z.x + h * d.dx, z.y + h * d.dy, z.theta + h * d.dtheta, z.v + h * d.dv};
}

} // namespace

BicycleState integrate_bicycle(const BicycleState& z, const ControlInput& u,
                               const VehicleGeometry& geom, double dt) {
    if (dt <= 0.0) throw ModelError("integrate_bicycle requires dt > 0");
    Deriv k1 = f(z, u, geom);
    Deriv k2 = f(advance(z, k1, 0.5 * dt), u, geom);
    Deriv k3 = f(advance(z, k2, 0.5 * dt), u, geom);
    Deriv k4 = f(advance(z, k3, dt), u, geom);
    BicycleState out{
        z.x + dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx),
        z.y + dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy),
        z.theta + dt / 6.0 * (k1.dtheta + 2.0 * k2.dtheta + 2.0 * k3.dtheta + k4.dtheta),
        z.v + dt / 6.0 * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv),
    };
    out.theta = normalize_angle(out.theta);
    out.v = std::max(0.0, out.v);
    return out;
}

} // namespace hmdp::sim
