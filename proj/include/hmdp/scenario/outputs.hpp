#pragma once

#include "hmdp/scenario/runner.hpp"

#include <string>

namespace hmdp::scenario {

/// Writes trace.csv (header t,s,a,x_hv,v_hv,y_hv,x_or,x_ob,v_ob,x_og,
/// gap_ob,v_star,feasible_count), report.json, and the plot-data files
/// states.dat, actions.dat, lateral.dat, gap_ob.dat as (t, value) pairs.
void emit_outputs(const RunOutput& run, const std::string& out_dir);

/// The exact bytes emit_outputs writes for trace.csv.
std::string trace_csv_text(const RunOutput& run);

std::string report_json_text(const RunReport& report);

/// Parsed projection of a trace.csv file.
struct ParsedTrace {
    std::vector<TraceRow> rows; ///< only the CSV-projected fields are filled
};

ParsedTrace parse_trace_csv(const std::string& csv_text);

/// Recomputes the value-decrease verdict from the CSV projection alone
/// (v_star column plus stage costs implied by the s column).
MonitorVerdict replay_lyapunov(const ParsedTrace& trace, const lane::LaneChangeParams& params,
                               double tolerance);

} // namespace hmdp::scenario
