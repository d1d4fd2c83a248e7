#include "monopath/oracle.hpp"

#include <limits>

#include "monopath/gradient.hpp"

namespace monopath {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    return a > kSaturated - b ? kSaturated : a + b;
}

// Σ_{k=0}^{kmax} C(n-1, k), saturating
std::uint64_t count_from_start(std::size_t n, std::size_t kmax) {
    std::uint64_t total = 0;
    unsigned __int128 binom = 1;  // C(n-1, 0)
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) {
            binom = binom * (n - k) / k;  // C(n-1,k) from C(n-1,k-1), exact
            if (binom > kSaturated) {
                return kSaturated;
            }
        }
        total = sat_add(total, static_cast<std::uint64_t>(binom));
    }
    return total;
}

// Calls emit(path) for every feasible path, in the documented order.
template <typename Emit>
void walk_paths(std::size_t m, std::size_t n, StartMode start_mode, Emit&& emit) {
    MonotonePath path(n);
    std::vector<std::size_t> climbs;  // climb columns, ascending, each in [2, n]

    auto emit_current = [&](std::size_t start_row) {
        path[0] = start_row;
        std::size_t next_climb = 0;
        for (std::size_t j = 2; j <= n; ++j) {
            const bool climb = next_climb < climbs.size() && climbs[next_climb] == j;
            path[j - 1] = path[j - 2] - (climb ? 1 : 0);
            if (climb) {
                ++next_climb;
            }
        }
        emit(path);
    };

    const std::size_t first_start = start_mode == StartMode::EnforcedBottomStart ? m : 1;
    for (std::size_t r = m; r >= first_start; --r) {
        const std::size_t max_climbs = std::min(r - 1, n - 1);
        for (std::size_t k = 0; k <= max_climbs; ++k) {
            climbs.assign(k, 0);
            for (std::size_t t = 0; t < k; ++t) {
                climbs[t] = 2 + t;  // lexicographically first combination
            }
            while (true) {
                emit_current(r);
                if (k == 0) {
                    break;
                }
                // advance to the next combination of k columns from {2..n}
                std::size_t t = k;
                while (t > 0 && climbs[t - 1] == n - (k - t)) {
                    --t;
                }
                if (t == 0) {
                    break;
                }
                ++climbs[t - 1];
                for (std::size_t u = t; u < k; ++u) {
                    climbs[u] = climbs[u - 1] + 1;
                }
            }
        }
    }
}

void check_instance(std::size_t m, std::size_t n) {
    if (m < 2) {
        throw DimensionMismatch("path enumeration needs at least 2 rows");
    }
    if (n < 1) {
        throw DimensionMismatch("path enumeration needs at least 1 column");
    }
}

}  // namespace

std::uint64_t count_paths(std::size_t m, std::size_t n, StartMode start_mode) {
    check_instance(m, n);
    if (start_mode == StartMode::EnforcedBottomStart) {
        return count_from_start(n, std::min(m - 1, n - 1));
    }
    std::uint64_t total = 0;
    for (std::size_t r = 1; r <= m; ++r) {
        total = sat_add(total, count_from_start(n, std::min(r - 1, n - 1)));
    }
    return total;
}

std::vector<MonotonePath> enumerate_paths(std::size_t m, std::size_t n, StartMode start_mode,
                                          std::uint64_t cap) {
    const std::uint64_t count = count_paths(m, n, start_mode);
    if (count > cap) {
        throw InstanceTooLarge(count, cap);
    }
    std::vector<MonotonePath> paths;
    paths.reserve(static_cast<std::size_t>(count));
    walk_paths(m, n, start_mode, [&](const MonotonePath& p) { paths.push_back(p); });
    return paths;
}

double path_cost(const CostMatrix& c, const StrengthField& s_field, double mu,
                 const MonotonePath& path) {
    const std::size_t m = c.rows();
    const std::size_t n = c.cols();
    if (path.size() != n) {
        throw InfeasiblePath("path has " + std::to_string(path.size()) + " entries for " +
                             std::to_string(n) + " columns");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (path[j] < 1 || path[j] > m) {
            throw InfeasiblePath("row index " + std::to_string(path[j]) + " at column " +
                                 std::to_string(j + 1) + " is outside 1.." + std::to_string(m));
        }
        if (j > 0 && path[j - 1] != path[j] && path[j - 1] != path[j] + 1) {
            throw InfeasiblePath("step from row " + std::to_string(path[j - 1]) + " to row " +
                                 std::to_string(path[j]) + " at column " + std::to_string(j + 1));
        }
    }

    double cost = c(path[0], 1);
    for (std::size_t j = 2; j <= n; ++j) {
        const std::size_t row = path[j - 1];
        if (path[j - 2] == row + 1) {
            cost += mu * (1.0 - s_field(row + 1, j));
        }
        cost += c(row, j);
    }
    return cost;
}

PathResult brute_force_solve(const CostMatrix& c, const SolverParams& params, std::uint64_t cap) {
    validate_params(params, c);
    const std::uint64_t count = count_paths(c.rows(), c.cols(), params.start_mode);
    if (count > cap) {
        throw InstanceTooLarge(count, cap);
    }

    const DerivativeField d = windowed_derivative(c, params.w);
    const StrengthField s = strength(d, params.beta);

    PathResult best;
    best.total_cost = std::numeric_limits<double>::infinity();
    walk_paths(c.rows(), c.cols(), params.start_mode, [&](const MonotonePath& p) {
        const double cost = path_cost(c, s, params.mu, p);
        if (cost < best.total_cost) {
            best.total_cost = cost;
            best.path = p;
        }
    });
    return best;
}

}  // namespace monopath
