#include "hmdp/solver/monitors.hpp"

#include <cmath>
#include <sstream>

namespace hmdp {

MonitorVerdict check_lyapunov(const std::vector<ValueRecord>& records, double tolerance) {
    MonitorVerdict verdict;
    for (size_t i = 0; i + 1 < records.size(); ++i) {
        const ValueRecord& cur = records[i];
        const ValueRecord& next = records[i + 1];
        double decrease = next.value - cur.value;
        bool inequality_ok = decrease <= -cur.executed_stage_cost + tolerance;
        bool equality_ok =
            !(std::abs(decrease) <= tolerance && cur.executed_stage_cost > tolerance);
        if (!inequality_ok || !equality_ok) {
            verdict.ok = false;
            verdict.first_offending_index = static_cast<int>(i);
            std::ostringstream oss;
            oss << "at k=" << cur.k << ": V(k+1)-V(k)=" << decrease
                << ", executed stage cost=" << cur.executed_stage_cost
                << (inequality_ok ? " (plateau off goal)" : " (insufficient decrease)");
            verdict.detail = oss.str();
            return verdict;
        }
    }
    return verdict;
}

} // namespace hmdp
