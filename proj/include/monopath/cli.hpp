#pragma once

#include <iosfwd>
#include <string>

#include "monopath/types.hpp"

namespace monopath {

enum class InputFormat { Auto, Csv, Pgm };

struct CliConfig {
    std::string input;
    InputFormat format = InputFormat::Auto;
    SolverParams params;
    bool normalize = false;
    std::string out_path;  // path document (JSON); empty = not written
    std::string overlay;   // overlay image (PPM); empty = not written
    std::string tables;    // Q/P/D/S dump (CSV blocks); empty = not written
    bool verify = false;   // run the brute-force oracle and compare
    bool quiet = false;
    bool verbose = false;
};

/// Executes one solve: reads the input, solves, writes the requested
/// outputs, prints the path and cost. Returns the process exit status:
/// 0 success (and oracle agreement when verifying), 1 usage error,
/// 2 input or I/O error, 3 solver error, 4 oracle disagreement.
/// Diagnostics go to err as a single "error: ..." line.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Same, wired to stdout/stderr.
int run(const CliConfig& config);

}  // namespace monopath
