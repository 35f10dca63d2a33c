#pragma once

#include <optional>
#include <vector>

#include "zec/rational.hpp"

namespace zec {

// Exact feasibility of { x >= 0 : A x = b } over the rationals, by phase-1
// simplex on a dense tableau with Bland's rule (deterministic, terminating).
// Returns a feasible point, or nullopt when the system is infeasible.
std::optional<std::vector<Rational>> solve_equality_feasibility(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b);

}  // namespace zec
