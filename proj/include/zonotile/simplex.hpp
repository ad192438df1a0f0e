#pragma once

#include "zonotile/rational.hpp"

namespace zonotile {

/// Outcome of a strict-feasibility query. When feasible, `witness` satisfies
/// every row with slack at least one (the system is homogeneous, so strict
/// solutions scale). When infeasible, `farkas` holds multipliers y >= 0, not
/// all zero, with sum_i y_i row_i = 0 — an exact infeasibility certificate.
struct LpResult {
  bool feasible = false;
  RatVec witness;
  RatVec farkas;
};

/// Decides whether some x satisfies row_i . x >= 1 for every row, by exact
/// rational Phase-I simplex with Bland's rule (termination guaranteed, no
/// tolerances).
LpResult feasible_system(const std::vector<RatVec>& rows);

/// Spec-facing wrapper: strict sign system sign_i * <h, a_i> > 0.
LpResult feasible(const std::vector<std::pair<RatVec, int>>& rows);

}  // namespace zonotile
