#include "hmdp/sim/tracker.hpp"

#include "hmdp/core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hmdp::sim {

ControlInput track_reference(const BicycleState& z, const ReferencePoint& ref,
                             const VehicleGeometry& geom, const TrackerGains& gains,
                             const InputBounds& bounds) {
    return track_reference(z, ref, std::numeric_limits<double>::quiet_NaN(), geom, gains, bounds);
}

ControlInput track_reference(const BicycleState& z, const ReferencePoint& ref, double path_heading,
                             const VehicleGeometry& geom, const TrackerGains& gains,
                             const InputBounds& bounds) {
    ControlInput u;
    u.a = std::clamp(gains.k_v * (ref.v - z.v), bounds.a_min, bounds.a_max);

    double dx = ref.x - z.x;
    double dy = ref.y - z.y;
    double dist = std::hypot(dx, dy);
    double delta = 0.0;
    if (dist > 1e-9) {
        double alpha = normalize_angle(std::atan2(dy, dx) - z.theta);
        delta = std::atan(2.0 * geom.wheelbase * std::sin(alpha) / dist);
    }
    if (!std::isnan(path_heading))
        delta += gains.k_heading * normalize_angle(path_heading - z.theta);
    u.delta = std::clamp(delta, -bounds.delta_max, bounds.delta_max);
    return u;
}

LowLevelResult low_level_loop(const BicycleState& z0, const std::vector<ReferencePoint>& references,
                              const VehicleGeometry& geom, const TrackerGains& gains,
                              const InputBounds& bounds, double T_l, double envelope, int ticks) {
    if (references.empty()) throw ModelError("low_level_loop requires at least one reference");
    size_t executed = ticks > 0 ? static_cast<size_t>(ticks) : references.size();
    if (executed > references.size())
        throw ModelError("low_level_loop: more ticks requested than references supplied");

    LowLevelResult result;
    result.z_end = z0;
    for (size_t i = 0; i < executed; ++i) {
        const BicycleState& z = result.z_end;
        double lookahead = std::max(gains.lookahead_min, gains.lookahead_gain * z.v);

        // Aim at the first reference at least one lookahead away; if the
        // segment is too short, extrapolate past its end.
        ReferencePoint aim = references.back();
        bool found = false;
        for (size_t j = i; j < references.size(); ++j) {
            if (std::hypot(references[j].x - z.x, references[j].y - z.y) >= lookahead) {
                aim = references[j];
                found = true;
                break;
            }
        }
        if (!found) {
            const ReferencePoint& last = references.back();
            double hx = 1.0, hy = 0.0;
            if (references.size() >= 2) {
                const ReferencePoint& prev = references[references.size() - 2];
                double norm = std::hypot(last.x - prev.x, last.y - prev.y);
                if (norm > 1e-9) {
                    hx = (last.x - prev.x) / norm;
                    hy = (last.y - prev.y) / norm;
                }
            }
            double have = std::hypot(last.x - z.x, last.y - z.y);
            double need = std::max(0.0, lookahead - have);
            aim.x = last.x + need * hx;
            aim.y = last.y + need * hy;
        }

        // Local path direction at the vehicle's station, for the heading
        // damping term.
        double path_heading = 0.0;
        {
            size_t a = i, b = std::min(i + 1, references.size() - 1);
            if (a == b && a > 0) --a;
            double hx = references[b].x - references[a].x;
            double hy = references[b].y - references[a].y;
            path_heading = (std::hypot(hx, hy) > 1e-9) ? std::atan2(hy, hx) : z.theta;
        }

        ReferencePoint target = aim;
        target.v = references[i].v;
        ControlInput u = track_reference(z, target, path_heading, geom, gains, bounds);
        result.z_end = integrate_bicycle(z, u, geom, T_l);
        result.states.push_back(result.z_end);

        double lateral_error = std::abs(result.z_end.y - references[i].y);
        result.max_lateral_error = std::max(result.max_lateral_error, lateral_error);
        if (lateral_error > envelope) result.tracking_diverged = true;
    }
    result.x_hv = result.z_end.x;
    result.v_hv = result.z_end.v;
    result.y_hv = result.z_end.y;
    return result;
}

} // namespace hmdp::sim
