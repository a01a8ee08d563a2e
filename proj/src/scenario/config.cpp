#include "hmdp/scenario/config.hpp"

#include "hmdp/core/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace hmdp::scenario {

using nlohmann::json;

std::string to_string(RunMode mode) { return mode == RunMode::Hmdp ? "hmdp" : "rule"; }

RunMode run_mode_from_string(const std::string& str) {
    if (str == "hmdp") return RunMode::Hmdp;
    if (str == "rule") return RunMode::Rule;
    throw ConfigError("mode must be \"hmdp\" or \"rule\", got \"" + str + "\"");
}

int ScenarioConfig::high_level_steps() const {
    return static_cast<int>(std::llround(duration / params.T_h));
}

int ScenarioConfig::substeps_per_decision() const {
    return static_cast<int>(std::llround(params.T_h / low_level.T_l));
}

const VehicleSpec* ScenarioConfig::find_vehicle(const std::string& id) const {
    for (const auto& v : vehicles)
        if (v.id == id) return &v;
    return nullptr;
}

void ScenarioConfig::validate() const {
    try {
        params.validate();
        solver.validate();
    } catch (const ModelError& e) {
        throw ConfigError(e.what());
    }
    if (!(duration > 0.0)) throw ConfigError("duration must be positive");
    double steps = duration / params.T_h;
    if (std::abs(steps - std::llround(steps)) > 1e-9)
        throw ConfigError("duration must be an integer multiple of T_h");
    double sub = params.T_h / low_level.T_l;
    if (!(low_level.T_l > 0.0) || std::abs(sub - std::llround(sub)) > 1e-9)
        throw ConfigError("T_h must be an integer multiple of T_l");
    if (!(ego.v0 >= 0.0)) throw ConfigError("ego.v0 must be >= 0");
    if (low_level.N_l < 1) throw ConfigError("low_level.N_l must be >= 1");

    std::set<std::string> ids;
    for (const auto& v : vehicles) {
        if (v.id != "Or" && v.id != "Ob" && v.id != "Og")
            throw ConfigError("vehicle id must be one of Or, Ob, Og; got \"" + v.id + "\"");
        if (!ids.insert(v.id).second) throw ConfigError("duplicate vehicle id \"" + v.id + "\"");
        if (!(v.v0 >= 0.0)) throw ConfigError("vehicle " + v.id + ": v0 must be >= 0");
    }
    for (const char* required : {"Or", "Ob", "Og"})
        if (!ids.count(required))
            throw ConfigError(std::string("missing vehicle \"") + required + "\"");
}

ScenarioConfig default_scenario() {
    ScenarioConfig cfg;
    // params: published values; lane geometry 0 / 3.8; trigger and
    // timing reconstruction documented in the README.
    cfg.ego = EgoSpec{0.0, 25.0, lane::LaneTag::Original};
    cfg.vehicles = {
        VehicleSpec{"Or", lane::LaneTag::Original, 130.0, 0.0, {}},
        VehicleSpec{"Ob", lane::LaneTag::Target, -10.0, 18.0,
                    lane::AccelProfile{{{0.8, 27.5}, {1.6, 0.0}}}},
        VehicleSpec{"Og", lane::LaneTag::Target, 40.0, 30.0, {}},
    };
    cfg.duration = 11.2;
    return cfg;
}

namespace {

json profile_to_json(const lane::AccelProfile& profile) {
    json arr = json::array();
    for (const auto& seg : profile.segments) arr.push_back({{"t", seg.t_start}, {"a", seg.a}});
    return arr;
}

lane::AccelProfile profile_from_json(const json& arr) {
    lane::AccelProfile profile;
    for (const auto& seg : arr)
        profile.segments.push_back({seg.at("t").get<double>(), seg.at("a").get<double>()});
    std::sort(profile.segments.begin(), profile.segments.end(),
              [](const auto& a, const auto& b) { return a.t_start < b.t_start; });
    return profile;
}

std::string lane_to_string(lane::LaneTag tag) {
    return tag == lane::LaneTag::Original ? "original" : "target";
}

lane::LaneTag lane_from_string(const std::string& str) {
    if (str == "original") return lane::LaneTag::Original;
    if (str == "target") return lane::LaneTag::Target;
    throw ConfigError("lane must be \"original\" or \"target\", got \"" + str + "\"");
}

json to_json(const ScenarioConfig& cfg) {
    const auto& p = cfg.params;
    json j;
    j["lanes"] = {{"width", p.lane_width},
                  {"original_center", p.original_lane_center},
                  {"target_center", p.target_lane_center}};
    j["ego"] = {{"x0", cfg.ego.x0}, {"v0", cfg.ego.v0}, {"lane", lane_to_string(cfg.ego.lane_tag)}};
    j["vehicles"] = json::array();
    for (const auto& v : cfg.vehicles)
        j["vehicles"].push_back({{"id", v.id},
                                 {"lane", lane_to_string(v.lane_tag)},
                                 {"x0", v.x0},
                                 {"v0", v.v0},
                                 {"accel_profile", profile_to_json(v.accel_profile)}});
    j["params"] = {{"c1", p.c1},
                   {"c2", p.c2},
                   {"c3", p.c3},
                   {"c4", p.c4},
                   {"c5", p.c5},
                   {"d_safe", p.d_safe},
                   {"de", p.de},
                   {"ac", p.ac},
                   {"t_qlc", p.t_qlc},
                   {"y_qlc", p.y_qlc},
                   {"vehicle_width", p.vehicle_width},
                   {"T_h", p.T_h},
                   {"trigger_distance", p.trigger_distance}};
    j["solver"] = {{"horizon", cfg.solver.horizon},
                   {"rollout_cap", cfg.solver.rollout_cap},
                   {"tolerance", cfg.solver.tolerance},
                   {"bound_pruning", cfg.solver.bound_pruning}};
    j["low_level"] = {{"T_l", cfg.low_level.T_l},
                      {"N_l", cfg.low_level.N_l},
                      {"wheelbase", cfg.low_level.geometry.wheelbase},
                      {"delta_max", cfg.low_level.bounds.delta_max},
                      {"a_min", cfg.low_level.bounds.a_min},
                      {"a_max", cfg.low_level.bounds.a_max},
                      {"k_v", cfg.low_level.gains.k_v},
                      {"lookahead_min", cfg.low_level.gains.lookahead_min},
                      {"lookahead_gain", cfg.low_level.gains.lookahead_gain},
                      {"k_heading", cfg.low_level.gains.k_heading},
                      {"tracking_envelope", cfg.low_level.tracking_envelope}};
    j["duration"] = cfg.duration;
    j["mode"] = to_string(cfg.mode);
    j["seed"] = cfg.seed;
    return j;
}

template <typename T>
void read_into(const json& j, const char* key, T& out) {
    if (auto it = j.find(key); it != j.end()) out = it->get<T>();
}

ScenarioConfig from_json(const json& j) {
    ScenarioConfig cfg = default_scenario();
    if (auto it = j.find("lanes"); it != j.end()) {
        read_into(*it, "width", cfg.params.lane_width);
        read_into(*it, "original_center", cfg.params.original_lane_center);
        read_into(*it, "target_center", cfg.params.target_lane_center);
    }
    if (auto it = j.find("ego"); it != j.end()) {
        read_into(*it, "x0", cfg.ego.x0);
        read_into(*it, "v0", cfg.ego.v0);
        if (it->contains("lane")) cfg.ego.lane_tag = lane_from_string((*it)["lane"].get<std::string>());
    }
    if (auto it = j.find("vehicles"); it != j.end()) {
        cfg.vehicles.clear();
        for (const auto& vj : *it) {
            VehicleSpec v;
            v.id = vj.at("id").get<std::string>();
            v.lane_tag = lane_from_string(vj.at("lane").get<std::string>());
            v.x0 = vj.at("x0").get<double>();
            v.v0 = vj.at("v0").get<double>();
            if (vj.contains("accel_profile")) v.accel_profile = profile_from_json(vj["accel_profile"]);
            cfg.vehicles.push_back(std::move(v));
        }
    }
    if (auto it = j.find("params"); it != j.end()) {
        auto& p = cfg.params;
        read_into(*it, "c1", p.c1);
        read_into(*it, "c2", p.c2);
        read_into(*it, "c3", p.c3);
        read_into(*it, "c4", p.c4);
        read_into(*it, "c5", p.c5);
        read_into(*it, "d_safe", p.d_safe);
        read_into(*it, "de", p.de);
        read_into(*it, "ac", p.ac);
        read_into(*it, "t_qlc", p.t_qlc);
        read_into(*it, "y_qlc", p.y_qlc);
        read_into(*it, "vehicle_width", p.vehicle_width);
        read_into(*it, "T_h", p.T_h);
        read_into(*it, "trigger_distance", p.trigger_distance);
    }
    if (auto it = j.find("solver"); it != j.end()) {
        read_into(*it, "horizon", cfg.solver.horizon);
        read_into(*it, "rollout_cap", cfg.solver.rollout_cap);
        read_into(*it, "tolerance", cfg.solver.tolerance);
        read_into(*it, "bound_pruning", cfg.solver.bound_pruning);
    }
    if (auto it = j.find("low_level"); it != j.end()) {
        read_into(*it, "T_l", cfg.low_level.T_l);
        read_into(*it, "N_l", cfg.low_level.N_l);
        read_into(*it, "wheelbase", cfg.low_level.geometry.wheelbase);
        read_into(*it, "delta_max", cfg.low_level.bounds.delta_max);
        read_into(*it, "a_min", cfg.low_level.bounds.a_min);
        read_into(*it, "a_max", cfg.low_level.bounds.a_max);
        read_into(*it, "k_v", cfg.low_level.gains.k_v);
        read_into(*it, "lookahead_min", cfg.low_level.gains.lookahead_min);
        read_into(*it, "lookahead_gain", cfg.low_level.gains.lookahead_gain);
        read_into(*it, "k_heading", cfg.low_level.gains.k_heading);
        read_into(*it, "tracking_envelope", cfg.low_level.tracking_envelope);
    }
    read_into(j, "duration", cfg.duration);
    if (j.contains("mode")) cfg.mode = run_mode_from_string(j["mode"].get<std::string>());
    read_into(j, "seed", cfg.seed);
    cfg.validate();
    return cfg;
}

} // namespace

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("scenario parse error in " + path + ": " + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        throw ConfigError("scenario schema error in " + path + ": " + e.what());
    }
}

std::string scenario_to_json_text(const ScenarioConfig& cfg) { return to_json(cfg).dump(2); }

ScenarioConfig scenario_from_json_text(const std::string& text) {
    try {
        return from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("scenario parse error: ") + e.what());
    }
}

ScenarioConfig with_override(const ScenarioConfig& cfg, const std::string& pointer,
                             const std::string& value_text) {
    json j = to_json(cfg);
    json value;
    try {
        value = json::parse(value_text);
    } catch (const json::exception&) {
        value = value_text; // plain string value
    }
    try {
        j[json::json_pointer(pointer)] = value;
    } catch (const json::exception& e) {
        throw ConfigError("bad parameter path \"" + pointer + "\": " + e.what());
    }
    try {
        return from_json(j);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("override produced an invalid scenario: ") + e.what());
    }
}

} // namespace hmdp::scenario
