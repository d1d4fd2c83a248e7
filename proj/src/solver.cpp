#include "monopath/solver.hpp"

#include <limits>

#include "monopath/gradient.hpp"

namespace monopath {

DpTables forward_pass(const CostMatrix& c, const StrengthField& s_field, double mu,
                      StartMode start_mode) {
    if (!c.grid().same_shape(s_field.grid())) {
        throw ShapeMismatch("cost matrix is " + std::to_string(c.rows()) + "x" +
                            std::to_string(c.cols()) + ", strength field is " +
                            std::to_string(s_field.rows()) + "x" +
                            std::to_string(s_field.cols()));
    }
    const std::size_t m = c.rows();
    const std::size_t n = c.cols();
    const double inf = std::numeric_limits<double>::infinity();

    Grid q(m, n);
    IndexGrid p(m, n);

    for (std::size_t i = 1; i <= m; ++i) {
        q(i, 1) = (start_mode == StartMode::EnforcedBottomStart && i < m) ? inf : c(i, 1);
        p(i, 1) = i;  // self-predecessor; never read by backtracking
    }

    for (std::size_t j = 2; j <= n; ++j) {
        for (std::size_t i = 1; i < m; ++i) {
            const double stay = q(i, j - 1);
            const double climb = q(i + 1, j - 1) + mu * (1.0 - s_field(i + 1, j));
            if (stay <= climb) {
                q(i, j) = stay + c(i, j);
                p(i, j) = i;
            } else {
                q(i, j) = climb + c(i, j);
                p(i, j) = i + 1;
            }
        }
        q(m, j) = q(m, j - 1) + c(m, j);
        p(m, j) = m;
    }

    return DpTables{std::move(q), std::move(p)};
}

PathResult backtrack(const DpTables& t) {
    const std::size_t m = t.q.rows();
    const std::size_t n = t.q.cols();

    std::size_t best = 1;
    for (std::size_t i = 2; i <= m; ++i) {
        if (t.q(i, n) < t.q(best, n)) {
            best = i;
        }
    }

    std::vector<std::size_t> path(n);
    path[n - 1] = best;
    for (std::size_t j = n - 1; j >= 1; --j) {
        path[j - 1] = t.p(path[j], j + 1);
    }

    return PathResult{std::move(path), t.q(best, n)};
}

SolveOutput solve(const CostMatrix& c, const SolverParams& params) {
    validate_params(params, c);
    DerivativeField d = windowed_derivative(c, params.w);
    StrengthField s = strength(d, params.beta);
    DpTables tables = forward_pass(c, s, params.mu, params.start_mode);
    PathResult result = backtrack(tables);
    return SolveOutput{std::move(result), std::move(tables), std::move(d), std::move(s)};
}

}  // namespace monopath
