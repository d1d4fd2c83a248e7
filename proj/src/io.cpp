#include "monopath/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace monopath {

ParseError::ParseError(std::size_t line_, std::size_t field_, const std::string& what_token)
    : Error("line " + std::to_string(line_) + ", field " + std::to_string(field_) + ": " +
            what_token),
      line(line_),
      field(field_) {}

RaggedRows::RaggedRows(std::size_t line_, std::size_t expected, std::size_t got)
    : Error("line " + std::to_string(line_) + " has " + std::to_string(got) +
            " fields, expected " + std::to_string(expected)),
      line(line_) {}

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

void check_stream(const std::ostream& out) {
    if (!out) {
        throw WriteFailure("output stream failed");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

CostMatrix read_csv(std::istream& in, bool normalize) {
    std::vector<double> values;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            throw ParseError(line_no, 1, "empty line");
        }

        std::size_t field_count = 0;
        std::string_view rest = line;
        while (true) {
            const std::size_t comma = rest.find(',');
            const std::string_view raw =
                comma == std::string_view::npos ? rest : rest.substr(0, comma);
            ++field_count;

            const std::string_view token = trim(raw);
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
            if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
                throw ParseError(line_no, field_count,
                                 "malformed number '" + std::string(raw) + "'");
            }
            values.push_back(v);

            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }

        if (rows == 0) {
            cols = field_count;
        } else if (field_count != cols) {
            throw RaggedRows(line_no, cols, field_count);
        }
        ++rows;
    }

    if (normalize && !values.empty()) {
        const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
        const double lo = *lo_it;
        const double hi = *hi_it;
        if (hi > lo) {
            for (double& v : values) {
                v = (v - lo) / (hi - lo);
            }
        } else {
            std::fill(values.begin(), values.end(), 0.0);
        }
    }

    return CostMatrix(rows, cols, std::move(values));
}

void write_csv(const CostMatrix& c, std::ostream& out) {
    for (std::size_t i = 1; i <= c.rows(); ++i) {
        for (std::size_t j = 1; j <= c.cols(); ++j) {
            if (j > 1) {
                out << ',';
            }
            out << format_double(c(i, j));
        }
        out << '\n';
    }
    check_stream(out);
}

// ---------------------------------------------------------------------------
// PGM
// ---------------------------------------------------------------------------

namespace {

// Whitespace and '#'-to-end-of-line comments, per the PNM header rules.
void skip_space_and_comments(std::istream& in) {
    int ch = in.peek();
    while (ch != EOF) {
        if (std::isspace(ch)) {
            in.get();
        } else if (ch == '#') {
            while (ch != EOF && ch != '\n') {
                ch = in.get();
            }
        } else {
            return;
        }
        ch = in.peek();
    }
}

std::uint64_t read_header_number(std::istream& in, const char* what) {
    skip_space_and_comments(in);
    std::uint64_t value = 0;
    bool any = false;
    int ch = in.peek();
    while (ch != EOF && std::isdigit(ch)) {
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
        if (value > std::numeric_limits<std::uint32_t>::max()) {
            throw MalformedHeader(std::string(what) + " is implausibly large");
        }
        any = true;
        in.get();
        ch = in.peek();
    }
    if (!any) {
        throw MalformedHeader(std::string("expected ") + what);
    }
    return value;
}

}  // namespace

CostMatrix read_pgm(std::istream& in) {
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
        throw UnsupportedMagic("expected PGM magic 'P2' or 'P5'");
    }
    const int after_magic = in.peek();
    if (after_magic == EOF || (!std::isspace(after_magic) && after_magic != '#')) {
        throw MalformedHeader("expected whitespace after magic");
    }
    const bool binary = magic[1] == '5';

    const std::uint64_t width = read_header_number(in, "width");
    const std::uint64_t height = read_header_number(in, "height");
    const std::uint64_t maxval = read_header_number(in, "maxval");
    if (width < 1 || height < 1) {
        throw MalformedHeader("image dimensions must be positive");
    }
    if (maxval < 1 || maxval > 65535) {
        throw MaxvalOutOfRange("maxval " + std::to_string(maxval) + " is outside 1..65535");
    }

    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<double> values;
    values.reserve(count);
    const double scale = static_cast<double>(maxval);

    if (binary) {
        int sep = in.get();  // the single whitespace byte after maxval
        if (sep == EOF || !std::isspace(sep)) {
            throw MalformedHeader("expected whitespace after maxval");
        }
        const bool two_byte = maxval > 255;
        std::vector<char> raw(count * (two_byte ? 2 : 1));
        in.read(raw.data(), static_cast<std::streamsize>(raw.size()));
        if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
            throw TruncatedPixelData("got " + std::to_string(in.gcount()) + " of " +
                                     std::to_string(raw.size()) + " pixel bytes");
        }
        const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
        for (std::size_t k = 0; k < count; ++k) {
            const std::uint32_t gray =
                two_byte ? (static_cast<std::uint32_t>(bytes[2 * k]) << 8) | bytes[2 * k + 1]
                         : bytes[k];
            values.push_back(1.0 - static_cast<double>(gray) / scale);
        }
    } else {
        for (std::size_t k = 0; k < count; ++k) {
            skip_space_and_comments(in);
            std::uint64_t gray = 0;
            bool any = false;
            int ch = in.peek();
            while (ch != EOF && std::isdigit(ch)) {
                gray = gray * 10 + static_cast<std::uint64_t>(ch - '0');
                any = true;
                in.get();
                ch = in.peek();
            }
            if (!any) {
                throw TruncatedPixelData("got " + std::to_string(k) + " of " +
                                         std::to_string(count) + " samples");
            }
            values.push_back(1.0 - static_cast<double>(gray) / scale);
        }
    }

    // a sample above maxval yields a negative cost and is rejected here
    return CostMatrix(height, width, std::move(values));
}

// ---------------------------------------------------------------------------
// Path document
// ---------------------------------------------------------------------------

void write_path(const PathResult& result, const SolverParams& params, std::size_t rows,
                std::ostream& out) {
    out << "{\n";
    out << "  \"rows\": " << rows << ",\n";
    out << "  \"cols\": " << result.path.size() << ",\n";
    out << "  \"path\": [";
    for (std::size_t j = 0; j < result.path.size(); ++j) {
        if (j > 0) {
            out << ", ";
        }
        out << result.path[j];
    }
    out << "],\n";
    out << "  \"total_cost\": " << format_double(result.total_cost) << ",\n";
    out << "  \"params\": {\n";
    out << "    \"w\": " << params.w << ",\n";
    out << "    \"beta\": " << format_double(params.beta) << ",\n";
    out << "    \"mu\": " << format_double(params.mu) << ",\n";
    out << "    \"start_mode\": \"" << to_string(params.start_mode) << "\"\n";
    out << "  }\n";
    out << "}\n";
    check_stream(out);
}

// ---------------------------------------------------------------------------
// Table dump
// ---------------------------------------------------------------------------

namespace {

void write_block(std::ostream& out, const char* name, const Grid& g) {
    out << name << '\n';
    for (std::size_t i = 1; i <= g.rows(); ++i) {
        for (std::size_t j = 1; j <= g.cols(); ++j) {
            if (j > 1) {
                out << ',';
            }
            out << format_double(g(i, j));
        }
        out << '\n';
    }
}

}  // namespace

void write_tables(const DpTables& t, const DerivativeField& d, const StrengthField& s,
                  std::ostream& out) {
    write_block(out, "Q", t.q);
    out << "P\n";
    for (std::size_t i = 1; i <= t.p.rows(); ++i) {
        for (std::size_t j = 1; j <= t.p.cols(); ++j) {
            if (j > 1) {
                out << ',';
            }
            out << t.p(i, j);
        }
        out << '\n';
    }
    write_block(out, "D", d.grid());
    write_block(out, "S", s.grid());
    check_stream(out);
}

// ---------------------------------------------------------------------------
// Overlay
// ---------------------------------------------------------------------------

void render_overlay(const OverlaySpec& spec, std::ostream& out) {
    const std::size_t m = spec.matrix.rows();
    const std::size_t n = spec.matrix.cols();
    if (spec.path.size() != n) {
        throw DimensionMismatch("path has " + std::to_string(spec.path.size()) +
                                " entries for " + std::to_string(n) + " columns");
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (spec.path[j] < 1 || spec.path[j] > m) {
            throw InfeasiblePath("row index " + std::to_string(spec.path[j]) + " at column " +
                                 std::to_string(j + 1) + " is outside 1.." + std::to_string(m));
        }
    }
    if (spec.depth < 1 || spec.depth > 255) {
        throw InvalidParams("overlay depth must be in 1..255");
    }

    const double depth = static_cast<double>(spec.depth);
    const auto clamp_to_depth = [&](std::uint8_t v) {
        return static_cast<unsigned char>(std::min<unsigned>(v, spec.depth));
    };

    out << "P6\n" << n << ' ' << m << '\n' << spec.depth << '\n';
    std::vector<unsigned char> row_buf(3 * n);
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            unsigned char* px = &row_buf[3 * (j - 1)];
            if (spec.color && spec.path[j - 1] == i) {
                px[0] = clamp_to_depth(spec.color->r);
                px[1] = clamp_to_depth(spec.color->g);
                px[2] = clamp_to_depth(spec.color->b);
            } else {
                const auto gray = static_cast<unsigned char>(
                    std::llround((1.0 - spec.matrix(i, j)) * depth));
                px[0] = px[1] = px[2] = gray;
            }
        }
        out.write(reinterpret_cast<const char*>(row_buf.data()),
                  static_cast<std::streamsize>(row_buf.size()));
    }
    check_stream(out);
}

}  // namespace monopath
