#pragma once

#include "hmdp/lane/traffic.hpp"
#include "hmdp/sim/tracker.hpp"
#include "hmdp/solver/plan.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hmdp::scenario {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

enum class RunMode { Hmdp, Rule };

std::string to_string(RunMode mode);
RunMode run_mode_from_string(const std::string& str);

struct VehicleSpec {
    std::string id; ///< one of Or, Ob, Og
    lane::LaneTag lane_tag = lane::LaneTag::Original;
    double x0 = 0.0;
    double v0 = 0.0;
    lane::AccelProfile accel_profile;
};

struct LowLevelConfig {
    double T_l = 0.1;
    int N_l = 3; ///< recorded for fidelity; the simple tracker does not use it
    sim::VehicleGeometry geometry;
    sim::InputBounds bounds;
    sim::TrackerGains gains;
    double tracking_envelope = 2.0; ///< lateral error beyond this flags divergence
};

struct EgoSpec {
    double x0 = 0.0;
    double v0 = 25.0;
    lane::LaneTag lane_tag = lane::LaneTag::Original;
};

struct ScenarioConfig {
    lane::LaneChangeParams params;
    EgoSpec ego;
    std::vector<VehicleSpec> vehicles;
    SolverConfig solver;
    LowLevelConfig low_level;
    double duration = 11.2;
    RunMode mode = RunMode::Hmdp;
    std::uint64_t seed = 1;

    int high_level_steps() const;
    int substeps_per_decision() const;
    const VehicleSpec* find_vehicle(const std::string& id) const;

    /// Validates all invariants (cost ordering, time-grid divisibility,
    /// vehicle cast, lane geometry). Throws ConfigError naming the field.
    void validate() const;
};

/// The bundled reconstruction of the published case study: stationary
/// leader ahead on the ego's lane, a fast-approaching rear vehicle and a
/// front vehicle on the adjacent lane, 11.2 s of simulated time.
ScenarioConfig default_scenario();

/// Loads and validates a scenario from a JSON file.
ScenarioConfig load_scenario(const std::string& path);

/// JSON round trip, used by `sweep` to apply parameter overrides.
std::string scenario_to_json_text(const ScenarioConfig& cfg);
ScenarioConfig scenario_from_json_text(const std::string& text);

/// Applies `value_text` (parsed as JSON) at a JSON-pointer-style path like
/// "/solver/horizon" or "/vehicles/1/v0", then revalidates.
ScenarioConfig with_override(const ScenarioConfig& cfg, const std::string& pointer,
                             const std::string& value_text);

} // namespace hmdp::scenario
