#pragma once

#include "monopath/types.hpp"

namespace monopath {

/// Windowed derivative of the cost field, row by row. For interior columns
/// j ∈ [w+1, n−w+1],
///
///   D(i,j) = (1/w) · Σ_{k=0}^{w−1} |C(i, j+k) − C(i, j−w+k)|
///
/// i.e. the mean absolute difference between the forward window starting at
/// j and the backward window ending at j−1, positionally aligned. Columns
/// left of the interior replicate column w+1, columns right of it replicate
/// column n−w+1.
///
/// Throws InvalidParams when w < 1, WindowTooLarge when n < 2w.
DerivativeField windowed_derivative(const CostMatrix& c, std::size_t w);

/// Logistic squashing of the derivative, element-wise:
///
///   S(i,j) = 1 / (1 + exp(−beta · D(i,j)))
///
/// With D ≥ 0 and beta ≥ 0 every output lies in [1/2, 1); when exp
/// underflows the result saturates one ulp below 1 so the half-open range
/// holds. Throws InvalidParams when beta < 0.
StrengthField strength(const DerivativeField& d, double beta);

}  // namespace monopath
