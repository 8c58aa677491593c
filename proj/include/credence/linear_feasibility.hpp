#pragma once

#include "credence/rational.hpp"

#include <vector>

namespace credence {

/// Outcome of an exact feasibility run on {A x = b, x >= 0}.
///
/// Infeasible systems carry a Farkas certificate y with yᵀA ≤ 0 componentwise
/// and yᵀb > 0; any nonnegative x would give the contradiction
/// 0 < yᵀb = yᵀA x ≤ 0.
struct FeasibilityResult {
    bool feasible = false;
    std::vector<Rational> point;  // one entry per column when feasible
    std::vector<Rational> farkas; // one entry per row when infeasible
};

/// Decides {A x = b, x >= 0} over exact rationals and produces a witness
/// point or a Farkas certificate. Deterministic for identical input.
///
/// Runs a sparsity-aware Gauss-Jordan pass first (which settles inconsistent
/// and fully determined systems and yields certificates directly from the
/// tracked row combinations) and falls back to a Bland-rule phase-one simplex
/// when free columns remain.
FeasibilityResult solve_nonnegative_system(const std::vector<std::vector<Rational>>& A,
                                           const std::vector<Rational>& b);

} // namespace credence
