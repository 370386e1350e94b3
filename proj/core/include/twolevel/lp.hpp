#pragma once

#include <optional>
#include <vector>

#include "twolevel/rational.hpp"

namespace tl {

// Exact feasibility: some x with aeq * x == beq and x_i >= 0 for every i with
// nonneg[i] set, or nullopt. Phase-one primal simplex over Q with Bland's rule.
std::optional<RatVector> lp_feasible(const RatMatrix& aeq, const RatVector& beq,
                                     const std::vector<bool>& nonneg);

}  // namespace tl
