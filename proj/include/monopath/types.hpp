#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monopath {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ValueOutOfRange : public Error {
public:
    ValueOutOfRange(std::size_t row, std::size_t col, double value);

    std::size_t row;
    std::size_t col;
    double value;
};

class WindowTooLarge : public Error {
public:
    WindowTooLarge(std::size_t w, std::size_t n);

    std::size_t w;
    std::size_t n;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class InstanceTooLarge : public Error {
public:
    InstanceTooLarge(std::uint64_t count, std::uint64_t cap);

    std::uint64_t count;
    std::uint64_t cap;
};

class InfeasiblePath : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

/// Dense row-major m×n grid. Public addressing is 1-based with row 1 on top,
/// matching the conventions used by every operation in this library.
template <typename T>
class BasicGrid {
public:
    BasicGrid() = default;

    BasicGrid(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), values_(rows * cols, fill) {}

    BasicGrid(std::size_t rows, std::size_t cols, std::vector<T> values)
        : rows_(rows), cols_(cols), values_(std::move(values)) {
        if (values_.size() != rows_ * cols_) {
            throw DimensionMismatch("grid needs " + std::to_string(rows_ * cols_) +
                                    " values, got " + std::to_string(values_.size()));
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T operator()(std::size_t i, std::size_t j) const {
        return values_[(i - 1) * cols_ + (j - 1)];
    }
    T& operator()(std::size_t i, std::size_t j) {
        return values_[(i - 1) * cols_ + (j - 1)];
    }

    const std::vector<T>& data() const { return values_; }

    template <typename U>
    bool same_shape(const BasicGrid<U>& other) const {
        return rows_ == other.rows() && cols_ == other.cols();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> values_;
};

using Grid = BasicGrid<double>;
using IndexGrid = BasicGrid<std::size_t>;

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// m×n cost field with every value in [0,1]. Construction validates; an
/// instance that exists satisfies all invariants. Immutable.
class CostMatrix {
public:
    /// Row-major values, row 1 first. Throws DimensionMismatch when the count
    /// (or m < 2, n < 1) is wrong, ValueOutOfRange at the first offending
    /// entry in row-major order.
    CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

    std::size_t rows() const { return grid_.rows(); }
    std::size_t cols() const { return grid_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return grid_(i, j); }
    const Grid& grid() const { return grid_; }

private:
    Grid grid_;
};

enum class StartMode {
    FreeStart,           // paths may begin on any row
    EnforcedBottomStart  // paths must begin on row m
};

const char* to_string(StartMode mode);

struct SolverParams {
    std::size_t w = 5;
    double beta = 7.0;
    double mu = 16.0;
    StartMode start_mode = StartMode::FreeStart;
};

/// Succeeds iff the params are internally valid (w ≥ 1, beta ≥ 0, mu ≥ 0)
/// and the matrix is wide enough for the windowed derivative to have at
/// least one interior column, i.e. n ≥ 2w.
void validate_params(const SolverParams& params, const CostMatrix& c);

/// Windowed-derivative field D. Entries are in [0,1] for any window over a
/// CostMatrix. Immutable after construction.
class DerivativeField {
public:
    explicit DerivativeField(Grid grid);

    std::size_t rows() const { return grid_.rows(); }
    std::size_t cols() const { return grid_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return grid_(i, j); }
    const Grid& grid() const { return grid_; }

private:
    Grid grid_;
};

/// Derivative-strength field S, every entry in [1/2, 1). Immutable.
class StrengthField {
public:
    explicit StrengthField(Grid grid);

    std::size_t rows() const { return grid_.rows(); }
    std::size_t cols() const { return grid_.cols(); }
    double operator()(std::size_t i, std::size_t j) const { return grid_(i, j); }
    const Grid& grid() const { return grid_; }

private:
    Grid grid_;
};

/// Forward-pass output: Q accumulates path costs, P holds the predecessor
/// row of each cell. P(i,j) ∈ {i, i+1} for i < m and P(m,j) = m.
struct DpTables {
    Grid q;
    IndexGrid p;
};

/// Recovered optimal path: one 1-based row index per column, and its cost.
/// path[j] - path[j+1] ∈ {0, 1} (0-based j): the path never moves downward
/// and climbs at most one row per column.
struct PathResult {
    std::vector<std::size_t> path;
    double total_cost = 0.0;
};

}  // namespace monopath
