#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "monopath/oracle.hpp"
#include "monopath/types.hpp"

namespace monopath {

// ---------------------------------------------------------------------------
// I/O errors
// ---------------------------------------------------------------------------

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t field, const std::string& what_token);

    std::size_t line;
    std::size_t field;
};

class RaggedRows : public Error {
public:
    RaggedRows(std::size_t line, std::size_t expected, std::size_t got);

    std::size_t line;
};

class UnsupportedMagic : public Error {
public:
    using Error::Error;
};

class MalformedHeader : public Error {
public:
    using Error::Error;
};

class TruncatedPixelData : public Error {
public:
    using Error::Error;
};

class MaxvalOutOfRange : public Error {
public:
    using Error::Error;
};

class WriteFailure : public Error {
public:
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Readers
// ---------------------------------------------------------------------------

/// Comma-separated decimal numbers, one matrix row per line, LF or CRLF.
/// With normalize the values are min-max rescaled into [0,1] (a constant
/// input maps to all zeros); without it any value outside [0,1] is a hard
/// ValueOutOfRange.
CostMatrix read_csv(std::istream& in, bool normalize = false);

/// P2 (ASCII) or P5 (binary) PGM, maxval 1..65535, two-byte binary samples
/// big-endian. Maps gray to cost as cost = 1 − gray/maxval: white is cost
/// zero, black is cost one. '#' comments are skipped wherever the format
/// allows whitespace.
CostMatrix read_pgm(std::istream& in);

// ---------------------------------------------------------------------------
// Writers (numbers at 17 significant digits for exact double round-trip)
// ---------------------------------------------------------------------------

/// CSV rendering of a matrix; read_csv of the output reproduces the values
/// bitwise.
void write_csv(const CostMatrix& c, std::ostream& out);

/// JSON document with fields rows, cols, path (1-based), total_cost and
/// params {w, beta, mu, start_mode}.
void write_path(const PathResult& result, const SolverParams& params, std::size_t rows,
                std::ostream& out);

/// Labeled CSV blocks for Q, P, D and S, in that order. P entries are
/// written as integers.
void write_tables(const DpTables& t, const DerivativeField& d, const StrengthField& s,
                  std::ostream& out);

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

/// Overlay of a path on its cost field, rendered like the source image:
/// background gray(i,j) = round((1 − cost(i,j))·depth), the path cell of
/// each column replaced by the path color. No color means background only.
struct OverlaySpec {
    CostMatrix matrix;
    MonotonePath path;
    std::optional<Rgb> color = Rgb{255, 0, 0};
    unsigned depth = 255;  // output maxval, 1..255
};

/// Writes the overlay as binary PPM (P6).
void render_overlay(const OverlaySpec& spec, std::ostream& out);

}  // namespace monopath
