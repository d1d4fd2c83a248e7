#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "monopath/cli.hpp"

int main(int argc, char** argv) {
    monopath::CliConfig config;

    CLI::App app{"monopath: minimal-cost monotone path through a cost field"};
    app.add_option("--input", config.input, "Input cost field (CSV or PGM)")->required();
    app.add_option("--format", config.format, "Input format (default: auto)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, monopath::InputFormat>{
                {"auto", monopath::InputFormat::Auto},
                {"csv", monopath::InputFormat::Csv},
                {"pgm", monopath::InputFormat::Pgm}},
            CLI::ignore_case));
    app.add_option("--w", config.params.w, "Derivative window size (default 5)");
    app.add_option("--beta", config.params.beta, "Strength decay (default 7)");
    app.add_option("--mu", config.params.mu, "Up-move penalty weight (default 16)");
    app.add_option("--start-mode", config.params.start_mode,
                   "Where paths may begin (default: free)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, monopath::StartMode>{
                {"free", monopath::StartMode::FreeStart},
                {"bottom", monopath::StartMode::EnforcedBottomStart}},
            CLI::ignore_case));
    app.add_flag("--normalize", config.normalize,
                 "Min-max rescale CSV values into [0,1] instead of rejecting them");
    app.add_option("--out-path", config.out_path, "Write the path document (JSON) here");
    app.add_option("--overlay", config.overlay, "Write the path overlay (PPM) here");
    app.add_option("--tables", config.tables, "Write the Q/P/D/S dump (CSV blocks) here");
    app.add_flag("--verify", config.verify,
                 "Check the result against the exhaustive path enumeration");
    app.add_flag("--quiet", config.quiet, "Suppress the stdout report");
    app.add_flag("--verbose", config.verbose, "Also print D/S extrema and up-move columns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 uses assorted nonzero codes; usage errors are exit 1 here
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    return monopath::run(config);
}
