#pragma once

#include "monopath/types.hpp"

namespace monopath {

/// Builds the accumulated-cost table Q and predecessor table P column by
/// column. Column 1 of Q is column 1 of C under FreeStart; under
/// EnforcedBottomStart only row m is finite and rows 1..m−1 hold +inf.
/// For j ≥ 2 and i < m,
///
///   Q(i,j) = C(i,j) + min( Q(i,j−1),                        // stay
///                          Q(i+1,j−1) + mu·(1 − S(i+1,j)) ) // climb
///
/// with ties resolved in favor of staying, and P(i,j) recording the chosen
/// predecessor row. The bottom row has no row below it: P(m,j) = m and
/// Q(m,j) = Q(m,j−1) + C(m,j).
///
/// Throws ShapeMismatch when c and s_field differ in shape.
DpTables forward_pass(const CostMatrix& c, const StrengthField& s_field, double mu,
                      StartMode start_mode);

/// Recovers the optimal path from completed tables: p_n is the topmost row
/// minimizing the last column of Q, then p_j = P(p_{j+1}, j+1) going left.
/// total_cost = Q(p_n, n).
PathResult backtrack(const DpTables& t);

struct SolveOutput {
    PathResult result;
    DpTables tables;
    DerivativeField derivative;
    StrengthField strength;
};

/// Full pipeline: validate, derivative, strength, forward pass, backtrack.
/// Intermediate fields are returned for inspection and emission.
SolveOutput solve(const CostMatrix& c, const SolverParams& params);

}  // namespace monopath
