#include "monopath/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "monopath/io.hpp"
#include "monopath/oracle.hpp"
#include "monopath/solver.hpp"

namespace monopath {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool has_suffix_ci(const std::string& s, const std::string& suffix) {
    if (s.size() < suffix.size()) {
        return false;
    }
    return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(), [](char a, char b) {
        return std::tolower(static_cast<unsigned char>(a)) ==
               std::tolower(static_cast<unsigned char>(b));
    });
}

InputFormat detect_format(const CliConfig& config, std::istream& in) {
    if (config.format != InputFormat::Auto) {
        return config.format;
    }
    if (has_suffix_ci(config.input, ".csv")) {
        return InputFormat::Csv;
    }
    if (has_suffix_ci(config.input, ".pgm")) {
        return InputFormat::Pgm;
    }
    char magic[2] = {0, 0};
    in.read(magic, 2);
    in.clear();
    in.seekg(0);
    const bool pgm = magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5');
    return pgm ? InputFormat::Pgm : InputFormat::Csv;
}

std::pair<double, double> grid_extrema(const Grid& g) {
    const auto [lo, hi] = std::minmax_element(g.data().begin(), g.data().end());
    return {*lo, *hi};
}

void print_report(const CliConfig& config, const CostMatrix& c, const SolveOutput& solved,
                  std::ostream& out) {
    out << "path:";
    for (const std::size_t row : solved.result.path) {
        out << ' ' << row;
    }
    out << '\n';
    out << "cost: " << format_double(solved.result.total_cost) << '\n';

    if (config.verbose) {
        const auto [d_lo, d_hi] = grid_extrema(solved.derivative.grid());
        const auto [s_lo, s_hi] = grid_extrema(solved.strength.grid());
        out << "D range: [" << format_double(d_lo) << ", " << format_double(d_hi) << "]\n";
        out << "S range: [" << format_double(s_lo) << ", " << format_double(s_hi) << "]\n";
        out << "up-moves at columns:";
        bool any = false;
        for (std::size_t j = 2; j <= c.cols(); ++j) {
            if (solved.result.path[j - 2] == solved.result.path[j - 1] + 1) {
                out << ' ' << j;
                any = true;
            }
        }
        if (!any) {
            out << " none";
        }
        out << '\n';
    }
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode) {
    std::ofstream out(path, mode);
    if (!out) {
        throw WriteFailure("cannot open '" + path + "' for writing");
    }
    return out;
}

int run_impl(const CliConfig& config, std::ostream& out, std::ostream& err) {
    if (config.input.empty()) {
        err << "error: no input file given\n";
        return 1;
    }

    std::ifstream in(config.input, std::ios::binary);
    if (!in) {
        err << "error: cannot open '" << config.input << "' for reading\n";
        return 2;
    }

    const InputFormat format = detect_format(config, in);
    const CostMatrix matrix =
        format == InputFormat::Pgm ? read_pgm(in) : read_csv(in, config.normalize);

    const SolveOutput solved = solve(matrix, config.params);

    if (!config.quiet) {
        print_report(config, matrix, solved, out);
    }

    if (!config.out_path.empty()) {
        auto sink = open_output(config.out_path, std::ios::out);
        write_path(solved.result, config.params, matrix.rows(), sink);
    }
    if (!config.overlay.empty()) {
        auto sink = open_output(config.overlay, std::ios::out | std::ios::binary);
        render_overlay(OverlaySpec{matrix, solved.result.path}, sink);
    }
    if (!config.tables.empty()) {
        auto sink = open_output(config.tables, std::ios::out);
        write_tables(solved.tables, solved.derivative, solved.strength, sink);
    }

    if (config.verify) {
        const PathResult reference = brute_force_solve(matrix, config.params);
        const double dp = solved.result.total_cost;
        const double bf = reference.total_cost;
        const double tol = 1e-9 * std::max({std::abs(dp), std::abs(bf), 1.0});
        if (!(dp == bf || std::abs(dp - bf) <= tol)) {
            err << "error: oracle disagreement: dp=" << format_double(dp)
                << " brute-force=" << format_double(bf) << '\n';
            return 4;
        }
        if (!config.quiet) {
            out << "verify: OK (brute-force cost " << format_double(bf) << ")\n";
        }
    }

    return 0;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return run_impl(config, out, err);
    } catch (const WindowTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const ShapeMismatch& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const InstanceTooLarge& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const Error& e) {
        // readers, validation and write failures
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const CliConfig& config) {
    return run(config, std::cout, std::cerr);
}

}  // namespace monopath
