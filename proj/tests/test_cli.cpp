#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "monopath/cli.hpp"
#include "test_support.hpp"

using namespace monopath;
namespace fs = std::filesystem;

namespace {

// Scratch directory for one test case, removed on destruction.
struct TempDir {
    fs::path dir;

    TempDir() {
        static int counter = 0;
        dir = fs::temp_directory_path() /
              ("monopath_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    fs::path write(const std::string& name, const std::string& content) const {
        const fs::path p = dir / name;
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RunResult {
    int status = -1;
    std::string out;
    std::string err;
};

RunResult run_config(const CliConfig& config) {
    RunResult r;
    std::ostringstream out, err;
    r.status = run(config, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// End-to-end invocation of the installed binary (flag parsing included).
RunResult run_binary(const TempDir& tmp, const std::string& args) {
    const char* exe = std::getenv("MONOPATH_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "MONOPATH_CLI must point at the built binary");
    const fs::path out_file = tmp.dir / "stdout.txt";
    const fs::path err_file = tmp.dir / "stderr.txt";
    const std::string command = std::string("'") + exe + "' " + args + " > '" +
                                out_file.string() + "' 2> '" + err_file.string() + "'";
    const int raw = std::system(command.c_str());
    RunResult r;
    r.status = WEXITSTATUS(raw);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    return r;
}

const char* kZero3x2 = "0,0\n0,0\n0,0\n";
const char* kWorked3x2 = "0.9,0.9\n0.1,0\n0,1\n";

}  // namespace

TEST_CASE("zero matrix with mu=0 takes the topmost tie under free start") {
    TempDir tmp;
    CliConfig config;
    config.input = tmp.write("m.csv", kZero3x2).string();
    config.params.w = 1;
    config.params.mu = 0.0;

    const RunResult r = run_config(config);
    CHECK(r.status == 0);
    CHECK(r.out == "path: 1 1\ncost: 0\n");
    CHECK(r.err.empty());
}

TEST_CASE("zero matrix with mu=0 under bottom start still ends at the topmost minimizer") {
    TempDir tmp;
    CliConfig config;
    config.input = tmp.write("m.csv", kZero3x2).string();
    config.params.w = 1;
    config.params.mu = 0.0;
    config.params.start_mode = StartMode::EnforcedBottomStart;

    const RunResult r = run_config(config);
    CHECK(r.status == 0);
    // with no stay penalty the climb off row 3 is free, and the final-column
    // tie between rows 2 and 3 resolves upward
    CHECK(r.out == "path: 3 2\ncost: 0\n");
}

TEST_CASE("cli reproduces the two-column example end to end") {
    TempDir tmp;
    const fs::path input = tmp.write("m.csv", kWorked3x2);
    const RunResult r = run_binary(tmp, "--input '" + input.string() + "' --w 1");
    CHECK(r.status == 0);
    CHECK(r.out == "path: 3 2\ncost: 0.014576819110409645\n");
    CHECK(r.err.empty());
}

TEST_CASE("missing input is a usage error") {
    TempDir tmp;
    const RunResult direct = run_config(CliConfig{});
    CHECK(direct.status == 1);
    CHECK(direct.err.substr(0, 6) == "error:");

    CHECK(run_binary(tmp, "").status == 1);
    CHECK(run_binary(tmp, "--no-such-flag").status == 1);
    CHECK(run_binary(tmp, "--w 1").status == 1);
}

TEST_CASE("unreadable or malformed input exits 2") {
    TempDir tmp;
    CliConfig config;
    config.input = (tmp.dir / "missing.csv").string();
    CHECK(run_config(config).status == 2);

    config.input = tmp.write("bad.csv", "0,zzz\n0,0\n").string();
    const RunResult r = run_config(config);
    CHECK(r.status == 2);
    CHECK(r.err.find("error:") == 0);

    config.input = tmp.write("ragged.csv", "0,0\n0\n0,0\n").string();
    CHECK(run_config(config).status == 2);

    config.input = tmp.write("range.csv", "0,7\n0,0\n").string();
    CHECK(run_config(config).status == 2);
}

TEST_CASE("window too large for the input exits 3") {
    TempDir tmp;
    std::string nine_cols;
    for (int i = 0; i < 3; ++i) {
        nine_cols += "0,0,0,0,0,0,0,0,0\n";
    }
    const fs::path input = tmp.write("nine.csv", nine_cols);

    CliConfig config;
    config.input = input.string();
    const RunResult direct = run_config(config);  // default w=5 needs n >= 10
    CHECK(direct.status == 3);
    CHECK(direct.err.find("error:") == 0);

    const RunResult e2e = run_binary(tmp, "--input '" + input.string() + "' --w 5");
    CHECK(e2e.status == 3);
    CHECK(e2e.err.find("window") != std::string::npos);
}

TEST_CASE("verify exits 0 and reports agreement on a feasible instance") {
    TempDir tmp;
    std::mt19937 rng(113);
    std::ostringstream body;
    {
        const CostMatrix c = testsupport::random_matrix(rng, 3, 10);
        for (std::size_t i = 1; i <= 3; ++i) {
            for (std::size_t j = 1; j <= 10; ++j) {
                body << (j > 1 ? "," : "") << c(i, j);
            }
            body << '\n';
        }
    }
    CliConfig config;
    config.input = tmp.write("m.csv", body.str()).string();
    config.params.w = 2;
    config.verify = true;

    const RunResult r = run_config(config);
    CHECK(r.status == 0);
    CHECK(r.out.find("verify: OK") != std::string::npos);
}

TEST_CASE("quiet suppresses the report, verbose adds the penalty diagnostics") {
    TempDir tmp;
    CliConfig config;
    config.input = tmp.write("m.csv", kWorked3x2).string();
    config.params.w = 1;

    config.quiet = true;
    CHECK(run_config(config).out.empty());

    config.quiet = false;
    config.verbose = true;
    const RunResult r = run_config(config);
    CHECK(r.out.find("D range: [") != std::string::npos);
    CHECK(r.out.find("S range: [") != std::string::npos);
    CHECK(r.out.find("up-moves at columns: 2") != std::string::npos);
}

TEST_CASE("requested outputs are written and stable across reruns") {
    TempDir tmp;
    const fs::path input = tmp.write("m.csv", kWorked3x2);
    const fs::path doc1 = tmp.dir / "path1.json";
    const fs::path doc2 = tmp.dir / "path2.json";
    const fs::path ppm1 = tmp.dir / "o1.ppm";
    const fs::path ppm2 = tmp.dir / "o2.ppm";
    const fs::path tab1 = tmp.dir / "t1.csv";
    const fs::path tab2 = tmp.dir / "t2.csv";

    const std::string base = "--input '" + input.string() + "' --w 1";
    const RunResult first = run_binary(
        tmp, base + " --out-path '" + doc1.string() + "' --overlay '" + ppm1.string() +
                 "' --tables '" + tab1.string() + "'");
    const RunResult second = run_binary(
        tmp, base + " --out-path '" + doc2.string() + "' --overlay '" + ppm2.string() +
                 "' --tables '" + tab2.string() + "'");
    CHECK(first.status == 0);
    CHECK(second.status == 0);
    CHECK(first.out == second.out);
    CHECK(slurp(doc1) == slurp(doc2));
    CHECK(slurp(ppm1) == slurp(ppm2));
    CHECK(slurp(tab1) == slurp(tab2));

    const std::string doc = slurp(doc1);
    CHECK(doc.find("\"path\": [3, 2]") != std::string::npos);
    CHECK(doc.find("\"total_cost\": 0.014576819110409645") != std::string::npos);
    CHECK(slurp(ppm1).substr(0, 3) == "P6\n");
    CHECK(slurp(tab1).substr(0, 2) == "Q\n");
}

TEST_CASE("format detection falls back from extension to magic bytes") {
    TempDir tmp;

    // PGM content behind a neutral extension: the magic decides
    const fs::path img = tmp.write("input.dat", "P2\n2 3\n255\n255 255\n255 255\n255 255\n");
    CliConfig config;
    config.input = img.string();
    config.params.w = 1;
    const RunResult r = run_config(config);
    CHECK(r.status == 0);
    CHECK(r.out.substr(0, 9) == "path: 1 1");

    // ...and CSV content likewise
    const fs::path plain = tmp.write("matrix.txt", kZero3x2);
    config.input = plain.string();
    CHECK(run_config(config).status == 0);

    // an explicit format overrides a misleading extension
    const fs::path misnamed = tmp.write("image.csv", "P2\n2 3\n255\n0 0\n0 0\n0 0\n");
    config.input = misnamed.string();
    config.format = InputFormat::Pgm;
    CHECK(run_config(config).status == 0);
    config.format = InputFormat::Auto;
    CHECK(run_config(config).status == 2);  // parsed as CSV per the extension
}

TEST_CASE("start mode and normalization flags reach the solver") {
    TempDir tmp;
    const fs::path input = tmp.write("wide.csv", "0,9\n0,0\n0,0\n");  // out of range raw

    const RunResult strict = run_binary(tmp, "--input '" + input.string() + "' --w 1");
    CHECK(strict.status == 2);

    const RunResult normalized = run_binary(
        tmp, "--input '" + input.string() + "' --w 1 --normalize --start-mode bottom --mu 0");
    CHECK(normalized.status == 0);
    CHECK(normalized.out.substr(0, 7) == "path: 3");
}

TEST_CASE("overlay written through the cli is a valid ppm") {
    TempDir tmp;
    const fs::path img = tmp.write("img.pgm", "P2\n4 3\n255\n"
                                              "200 200 200 200\n"
                                              "200 200 200 200\n"
                                              "255 255 255 255\n");
    const fs::path ppm = tmp.dir / "out.ppm";
    const RunResult r = run_binary(
        tmp, "--input '" + img.string() + "' --w 2 --overlay '" + ppm.string() + "'");
    CHECK(r.status == 0);
    const std::string bytes = slurp(ppm);
    CHECK(bytes.substr(0, 11) == "P6\n4 3\n255\n");
    CHECK(bytes.size() == 11 + 3 * 4 * 3);
}
