#pragma once

#include "hmdp/solver/plan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hmdp {

struct MonitorVerdict {
    bool ok = true;
    std::optional<int> first_offending_index;
    std::string detail;
};

/// Value-decrease monitor. For consecutive records checks
///   value(k+1) - value(k) <= -executed_stage_cost(k) + tolerance
/// and that value(k+1) == value(k) only happens when the executed stage
/// cost at k was zero (a goal tick).
MonitorVerdict check_lyapunov(const std::vector<ValueRecord>& records, double tolerance);

} // namespace hmdp
