#include "monopath/types.hpp"

#include <cstdio>

namespace monopath {

namespace {

std::string format_out_of_range(std::size_t row, std::size_t col, double value) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "value %.17g at (%zu,%zu) is outside [0,1]", value, row, col);
    return buf;
}

}  // namespace

ValueOutOfRange::ValueOutOfRange(std::size_t row_, std::size_t col_, double value_)
    : Error(format_out_of_range(row_, col_, value_)), row(row_), col(col_), value(value_) {}

WindowTooLarge::WindowTooLarge(std::size_t w_, std::size_t n_)
    : Error("window w=" + std::to_string(w_) + " needs n >= " + std::to_string(2 * w_) +
            " columns, matrix has n=" + std::to_string(n_)),
      w(w_),
      n(n_) {}

InstanceTooLarge::InstanceTooLarge(std::uint64_t count_, std::uint64_t cap_)
    : Error("instance has " + std::to_string(count_) +
            " feasible paths, enumeration cap is " + std::to_string(cap_)),
      count(count_),
      cap(cap_) {}

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols, std::vector<double> values) {
    if (rows < 2) {
        throw DimensionMismatch("cost matrix needs at least 2 rows, got " + std::to_string(rows));
    }
    if (cols < 1) {
        throw DimensionMismatch("cost matrix needs at least 1 column");
    }
    Grid grid(rows, cols, std::move(values));
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = 1; j <= cols; ++j) {
            const double v = grid(i, j);
            // NaN fails both comparisons and is rejected here too
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ValueOutOfRange(i, j, v);
            }
        }
    }
    grid_ = std::move(grid);
}

const char* to_string(StartMode mode) {
    switch (mode) {
        case StartMode::FreeStart:
            return "free_start";
        case StartMode::EnforcedBottomStart:
            return "enforced_bottom_start";
    }
    return "unknown";
}

void validate_params(const SolverParams& params, const CostMatrix& c) {
    if (params.w < 1) {
        throw InvalidParams("window size w must be >= 1");
    }
    if (!(params.beta >= 0.0)) {
        throw InvalidParams("decay beta must be >= 0");
    }
    if (!(params.mu >= 0.0)) {
        throw InvalidParams("penalty weight mu must be >= 0");
    }
    if (c.cols() < 2 * params.w) {
        throw WindowTooLarge(params.w, c.cols());
    }
}

DerivativeField::DerivativeField(Grid grid) : grid_(std::move(grid)) {
    for (std::size_t i = 1; i <= grid_.rows(); ++i) {
        for (std::size_t j = 1; j <= grid_.cols(); ++j) {
            const double v = grid_(i, j);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw ValueOutOfRange(i, j, v);
            }
        }
    }
}

StrengthField::StrengthField(Grid grid) : grid_(std::move(grid)) {
    for (std::size_t i = 1; i <= grid_.rows(); ++i) {
        for (std::size_t j = 1; j <= grid_.cols(); ++j) {
            const double v = grid_(i, j);
            if (!(v >= 0.5 && v < 1.0)) {
                throw ValueOutOfRange(i, j, v);
            }
        }
    }
}

}  // namespace monopath
