#pragma once

#include <vector>

#include "effcone/rational.hpp"

namespace effcone {

// Result of the exact conic feasibility solve for
//     target = sum_j c_j * generator_j,  c_j >= 0.
// Exactly one of the two alternatives is populated (Farkas dichotomy):
// either coefficients with exact re-substitution, or a separating
// functional phi with phi.g >= 0 for every generator and phi.target < 0.
struct ConicResult {
    bool feasible = false;
    std::vector<Rat> coefficients;  // one per generator, when feasible
    std::vector<Rat> separating;    // functional in ambient coords, when infeasible
};

// Phase-1 simplex over Q with Bland's lowest-index rule.
ConicResult nonneg_combination(const std::vector<Rat>& target,
                               const std::vector<std::vector<Rat>>& generators);

}  // namespace effcone
