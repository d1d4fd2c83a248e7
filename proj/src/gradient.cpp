#include "monopath/gradient.hpp"

#include <cmath>
#include <limits>

namespace monopath {

DerivativeField windowed_derivative(const CostMatrix& c, std::size_t w) {
    if (w < 1) {
        throw InvalidParams("window size w must be >= 1");
    }
    const std::size_t m = c.rows();
    const std::size_t n = c.cols();
    if (n < 2 * w) {
        throw WindowTooLarge(w, n);
    }

    const std::size_t lo = w + 1;      // first interior column
    const std::size_t hi = n - w + 1;  // last interior column, lo <= hi since n >= 2w

    Grid d(m, n);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = lo; j <= hi; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < w; ++k) {
                sum += std::abs(c(i, j + k) - c(i, j - w + k));
            }
            d(i, j) = sum / static_cast<double>(w);
        }
        for (std::size_t j = 1; j < lo; ++j) {
            d(i, j) = d(i, lo);
        }
        for (std::size_t j = hi + 1; j <= n; ++j) {
            d(i, j) = d(i, hi);
        }
    }
    return DerivativeField(std::move(d));
}

StrengthField strength(const DerivativeField& d, double beta) {
    if (!(beta >= 0.0)) {
        throw InvalidParams("decay beta must be >= 0");
    }
    // largest double below 1; keeps S inside [1/2, 1) when exp underflows
    const double below_one = std::nextafter(1.0, 0.0);

    Grid s(d.rows(), d.cols());
    for (std::size_t i = 1; i <= d.rows(); ++i) {
        for (std::size_t j = 1; j <= d.cols(); ++j) {
            const double v = 1.0 / (1.0 + std::exp(-beta * d(i, j)));
            s(i, j) = v < 1.0 ? v : below_one;
        }
    }
    return StrengthField(std::move(s));
}

}  // namespace monopath
