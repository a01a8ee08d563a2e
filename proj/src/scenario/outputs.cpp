#include "hmdp/scenario/outputs.hpp"

#include "hmdp/core/errors.hpp"
#include "hmdp/lane/params.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hmdp::scenario {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ModelError("cannot open for writing: " + path.string());
    out << text;
    if (!out) throw ModelError("write failed: " + path.string());
}

} // namespace

std::string trace_csv_text(const RunOutput& run) {
    std::ostringstream oss;
    oss << "t,s,a,x_hv,v_hv,y_hv,x_or,x_ob,v_ob,x_og,gap_ob,v_star,feasible_count\n";
    for (const auto& r : run.rows) {
        oss << fmt(r.t) << ',' << r.s_code << ',' << r.a_code << ',' << fmt(r.x_hv) << ','
            << fmt(r.v_hv) << ',' << fmt(r.y_hv) << ',' << fmt(r.x_or) << ',' << fmt(r.x_ob) << ','
            << fmt(r.v_ob) << ',' << fmt(r.x_og) << ',' << fmt(r.gap_ob) << ',' << fmt(r.v_star)
            << ',' << r.feasible_count << '\n';
    }
    return oss.str();
}

std::string report_json_text(const RunReport& report) {
    json j;
    j["mode"] = to_string(report.mode);
    j["timeline"] = json::array();
    for (const auto& ev : report.timeline)
        j["timeline"].push_back({{"t", ev.t}, {"a", ev.a_code}, {"s", ev.s_code}});
    j["min_gap_ob_during_change"] =
        std::isnan(report.min_gap_ob_during_change) ? json() : json(report.min_gap_ob_during_change);
    j["min_gap_adjacent_during_change"] = std::isnan(report.min_gap_adjacent_during_change)
                                              ? json()
                                              : json(report.min_gap_adjacent_during_change);
    j["goal_time"] = report.goal_time ? json(*report.goal_time) : json();
    j["lyapunov"] = {{"ok", report.lyapunov.ok},
                     {"first_offending_index", report.lyapunov.first_offending_index
                                                   ? json(*report.lyapunov.first_offending_index)
                                                   : json()},
                     {"detail", report.lyapunov.detail}};
    j["feasibility_ok"] = report.feasibility_ok;
    j["first_feasibility_failure_k"] = report.first_feasibility_failure_k
                                           ? json(*report.first_feasibility_failure_k)
                                           : json();
    j["constraints_respected"] = report.constraints_respected;
    j["tracking_diverged"] = report.tracking_diverged;
    j["max_model_error_x"] = report.max_model_error_x;
    j["root_infeasible"] = report.root_infeasible;
    j["root_infeasible_t"] = report.root_infeasible_t ? json(*report.root_infeasible_t) : json();
    j["wall_seconds"] = report.wall_seconds;
    return j.dump(2) + "\n";
}

void emit_outputs(const RunOutput& run, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ModelError("cannot create output directory " + out_dir + ": " + ec.message());

    write_file(fs::path(out_dir) / "trace.csv", trace_csv_text(run));
    write_file(fs::path(out_dir) / "report.json", report_json_text(run.report));

    std::ostringstream states, actions, lateral, gap;
    for (const auto& r : run.rows) {
        states << fmt(r.t) << ' ' << r.s_code << '\n';
        if (r.a_code != -1) actions << fmt(r.t) << ' ' << r.a_code << '\n';
        lateral << fmt(r.t) << ' ' << fmt(r.y_hv) << '\n';
        gap << fmt(r.t) << ' ' << fmt(r.gap_ob) << '\n';
    }
    write_file(fs::path(out_dir) / "states.dat", states.str());
    write_file(fs::path(out_dir) / "actions.dat", actions.str());
    write_file(fs::path(out_dir) / "lateral.dat", lateral.str());
    write_file(fs::path(out_dir) / "gap_ob.dat", gap.str());
}

ParsedTrace parse_trace_csv(const std::string& csv_text) {
    std::istringstream iss(csv_text);
    std::string line;
    if (!std::getline(iss, line)) throw ModelError("empty trace csv");
    if (line != "t,s,a,x_hv,v_hv,y_hv,x_or,x_ob,v_ob,x_og,gap_ob,v_star,feasible_count")
        throw ModelError("unexpected trace csv header: " + line);
    ParsedTrace trace;
    while (std::getline(iss, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 13) throw ModelError("bad trace csv row: " + line);
        TraceRow r;
        r.t = std::stod(cells[0]);
        r.s_code = std::stoi(cells[1]);
        r.a_code = std::stoi(cells[2]);
        r.x_hv = std::stod(cells[3]);
        r.v_hv = std::stod(cells[4]);
        r.y_hv = std::stod(cells[5]);
        r.x_or = std::stod(cells[6]);
        r.x_ob = std::stod(cells[7]);
        r.v_ob = std::stod(cells[8]);
        r.x_og = std::stod(cells[9]);
        r.gap_ob = std::stod(cells[10]);
        r.v_star = std::stod(cells[11]);
        r.feasible_count = std::stoi(cells[12]);
        trace.rows.push_back(r);
    }
    return trace;
}

MonitorVerdict replay_lyapunov(const ParsedTrace& trace, const lane::LaneChangeParams& params,
                               double tolerance) {
    std::vector<ValueRecord> records;
    for (const auto& r : trace.rows) {
        if (std::isnan(r.v_star)) continue;
        ValueRecord rec;
        rec.k = static_cast<int>(records.size());
        rec.value = r.v_star;
        rec.executed_stage_cost = params.cost(static_cast<lane::ManeuverState>(r.s_code));
        records.push_back(rec);
    }
    return check_lyapunov(records, tolerance);
}

} // namespace hmdp::scenario
