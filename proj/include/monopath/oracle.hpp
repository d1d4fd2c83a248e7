#pragma once

#include <cstdint>
#include <vector>

#include "monopath/types.hpp"

namespace monopath {

/// One feasible left-to-right path: a 1-based row index per column, never
/// moving downward and climbing at most one row per step.
using MonotonePath = std::vector<std::size_t>;

/// Instances with more feasible paths than this are rejected by the
/// enumeration routines; the oracle exists to certify the DP at desk scale.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Number of feasible paths, saturating at UINT64_MAX. A path is determined
/// by its start row r and the strictly increasing set of columns (each ≥ 2)
/// at which it climbs, so the count from r is Σ_{k=0}^{min(r−1,n−1)} C(n−1,k).
std::uint64_t count_paths(std::size_t m, std::size_t n, StartMode start_mode);

/// Materializes every distinct feasible path exactly once: start rows from
/// m upward to 1 (only m under EnforcedBottomStart), then by climb count,
/// then climb columns in lexicographic order.
/// Throws InstanceTooLarge when the path count exceeds cap.
std::vector<MonotonePath> enumerate_paths(std::size_t m, std::size_t n, StartMode start_mode,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Independent cost of one path by direct summation, no DP:
///
///   Σ_j C(p_j, j)  +  Σ_{j ≥ 2, p_{j−1} = p_j + 1} mu·(1 − S(p_{j−1}, j))
///
/// accumulated left to right, within each column penalty before cell, which
/// reproduces the forward pass's floating-point op order exactly.
/// Throws InfeasiblePath when the path violates the monotone invariant.
double path_cost(const CostMatrix& c, const StrengthField& s_field, double mu,
                 const MonotonePath& path);

/// Exhaustive minimum over all feasible paths: computes D and S through the
/// gradient module, walks every path, returns the lowest cost and the first
/// path attaining it. Ground truth for the DP solver.
PathResult brute_force_solve(const CostMatrix& c, const SolverParams& params,
                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace monopath
