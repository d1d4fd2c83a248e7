#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "monopath/types.hpp"

namespace testsupport {

inline monopath::CostMatrix random_matrix(std::mt19937& rng, std::size_t m, std::size_t n) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> values(m * n);
    for (double& v : values) {
        v = dist(rng);
    }
    return {m, n, std::move(values)};
}

// Each row holds one constant value.
inline monopath::CostMatrix constant_rows_matrix(std::mt19937& rng, std::size_t m,
                                                 std::size_t n) {
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> values;
    values.reserve(m * n);
    for (std::size_t i = 0; i < m; ++i) {
        const double v = dist(rng);
        values.insert(values.end(), n, v);
    }
    return {m, n, std::move(values)};
}

// Naive double-loop transcription of the windowed derivative, kept separate
// from the library implementation on purpose: interior columns j in
// [w+1, n-w+1] get the mean absolute difference of the aligned windows,
// the edges replicate the closest interior column.
inline monopath::Grid naive_windowed_derivative(const monopath::CostMatrix& c, std::size_t w) {
    const std::size_t m = c.rows();
    const std::size_t n = c.cols();
    monopath::Grid d(m, n);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = w + 1; j + w <= n + 1; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < w; ++k) {
                sum += std::abs(c(i, j + k) - c(i, j - w + k));
            }
            d(i, j) = sum / static_cast<double>(w);
        }
        for (std::size_t j = 1; j <= w; ++j) {
            d(i, j) = d(i, w + 1);
        }
        for (std::size_t j = n - w + 2; j <= n; ++j) {
            d(i, j) = d(i, n - w + 1);
        }
    }
    return d;
}

// Penalty-free monotone min-path cost, written directly from the path
// definition with no derivative, strength or penalty machinery. Independent
// check for the mu=0 degeneration of the solver.
inline double naive_min_path_cost(const monopath::CostMatrix& c, monopath::StartMode mode) {
    const std::size_t m = c.rows();
    const std::size_t n = c.cols();
    const double inf = std::numeric_limits<double>::infinity();
    monopath::Grid best(m, n);
    for (std::size_t i = 1; i <= m; ++i) {
        best(i, 1) = (mode == monopath::StartMode::EnforcedBottomStart && i < m) ? inf : c(i, 1);
    }
    for (std::size_t j = 2; j <= n; ++j) {
        for (std::size_t i = 1; i <= m; ++i) {
            const double from_below = i < m ? best(i + 1, j - 1) : inf;
            best(i, j) = std::min(best(i, j - 1), from_below) + c(i, j);
        }
    }
    double answer = best(1, n);
    for (std::size_t i = 2; i <= m; ++i) {
        answer = std::min(answer, best(i, n));
    }
    return answer;
}

inline bool relative_close(double a, double b, double tol) {
    if (a == b) {
        return true;
    }
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

}  // namespace testsupport
