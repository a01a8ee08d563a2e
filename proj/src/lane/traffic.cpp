#include "hmdp/lane/traffic.hpp"

#include "hmdp/core/errors.hpp"

#include <algorithm>

namespace hmdp::lane {

double AccelProfile::at(double t) const {
    double a = 0.0;
    for (const Segment& seg : segments) {
        if (seg.t_start <= t + 1e-12)
            a = seg.a;
        else
            break;
    }
    return a;
}

SurroundingVehicle surrounding_step(const SurroundingVehicle& vehicle, double t, double dt) {
    SurroundingVehicle next = vehicle;
    double a = vehicle.accel_profile.at(t);
    next.x = vehicle.x + vehicle.v * dt + 0.5 * a * dt * dt;
    next.v = std::max(0.0, vehicle.v + a * dt);
    return next;
}

std::vector<std::vector<PredictedVehicle>> predict_environment(
    const std::vector<SurroundingVehicle>& vehicles, int horizon, double T_h) {
    std::vector<std::vector<PredictedVehicle>> out;
    out.reserve(static_cast<size_t>(horizon));
    std::vector<PredictedVehicle> cur;
    cur.reserve(vehicles.size());
    for (const auto& v : vehicles) cur.push_back(PredictedVehicle{v.x, v.y, v.v});
    for (int i = 0; i < horizon; ++i) {
        for (auto& p : cur) p.x += p.v * T_h;
        out.push_back(cur);
    }
    return out;
}

EnvironmentState encode_vehicles(const std::vector<SurroundingVehicle>& vehicles) {
    EnvironmentState xi;
    xi.reserve(vehicles.size() * 4);
    for (const auto& v : vehicles) {
        xi.push_back(v.x);
        xi.push_back(v.y);
        xi.push_back(v.v);
        xi.push_back(0.0);
    }
    return xi;
}

EnvironmentState encode_vehicles(const std::vector<PredictedVehicle>& vehicles) {
    EnvironmentState xi;
    xi.reserve(vehicles.size() * 4);
    for (const auto& v : vehicles) {
        xi.push_back(v.x);
        xi.push_back(v.y);
        xi.push_back(v.v);
        xi.push_back(0.0);
    }
    return xi;
}

std::vector<PredictedVehicle> decode_vehicles(const EnvironmentState& xi) {
    if (xi.size() % 4 != 0) throw ModelError("environment vector must hold 4 slots per vehicle");
    std::vector<PredictedVehicle> out;
    out.reserve(xi.size() / 4);
    for (size_t i = 0; i + 3 < xi.size(); i += 4)
        out.push_back(PredictedVehicle{xi[i], xi[i + 1], xi[i + 2]});
    return out;
}

} // namespace hmdp::lane
