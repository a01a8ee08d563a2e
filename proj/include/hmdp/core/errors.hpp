#pragma once

#include <stdexcept>
#include <string>

namespace hmdp {

/// Ill-formed model or out-of-range query (bad index, dimension mismatch).
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// An action was applied whose successor leaves the constrained set.
class FeasibilityError : public std::runtime_error {
public:
    FeasibilityError(const std::string& what, int step_index)
        : std::runtime_error(what), step(step_index) {}
    int step; ///< step index at which the violation occurred
};

/// The baseline policy failed to reach the goal within the rollout cap.
class BaselineDivergenceError : public std::runtime_error {
public:
    BaselineDivergenceError(const std::string& what, int cap_steps)
        : std::runtime_error(what), cap(cap_steps) {}
    int cap;
};

/// No feasible action sequence of the requested length exists.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, int deepest)
        : std::runtime_error(what), deepest_feasible_depth(deepest) {}
    int deepest_feasible_depth;
};

/// The recursive-feasibility guarantee failed: a shifted plan whose
/// appended baseline action should be admissible was not.
class TheoremViolationError : public std::runtime_error {
public:
    explicit TheoremViolationError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hmdp
