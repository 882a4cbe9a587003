#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "qlin/affine.hpp"

namespace qlin {

enum class DocKind { matrix, form, subspace, quadric, frame };

const char* to_string(DocKind kind);

/// Parsed input file.  The grammar is one header line
///   <kind> <rows> [<cols>]
/// followed by whitespace-separated rational tokens in row-major order:
///   matrix r c    r*c entries
///   form n        n*n entries, symmetric
///   subspace k n  k generator rows of length n (k = 0 allowed)
///   quadric n     n rows of a, one row of b, one constant c
///   frame n       one origin row, then the n rows of the basis matrix
///                 (columns are the basis vectors)
/// Type invariants (symmetry, invertibility) are validated at parse time.
struct InputDocument {
    DocKind kind;
    std::variant<Matrix, QuadraticForm, Subspace, Quadric, Frame> payload;
};

InputDocument parse_document(std::istream& in, DocKind expected);
/// path "-" reads stdin.
InputDocument parse_document_file(const std::string& path, DocKind expected);

/// Canonical textual form, reparseable; subspaces come back as their
/// reduced basis, so write-parse-write is a fixed point.
std::string write_document(const InputDocument& doc);

/// Row-major float matrix for report payloads that live on the float tier.
struct FloatMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data;
};

using ReportValue = std::variant<std::string, Rational, double, long, Matrix,
                                 FloatMatrix, std::vector<Rational>,
                                 std::vector<double>, std::vector<std::string>>;

struct ReportEntry {
    std::string name;
    ReportValue value;
};

/// Structured command output.  Diagnostics are always recomputed
/// identities, never copies of results.
struct Report {
    std::string command;
    std::vector<ReportEntry> inputs;
    std::vector<ReportEntry> results;
    std::vector<ReportEntry> diagnostics;
};

struct Invocation {
    std::string command;            // charpoly, jordan, ..., quadric, frame-change
    std::string subcommand;         // for subspace and quadric commands
    std::vector<std::string> paths; // positional input files
    bool json = false;
    bool allow_float = false;
    double tol = 1e-10;
};

/// Loads the files, runs the library operation, assembles the report.
/// Throws ParseError and friends for bad input, DomainError for refusals.
Report run_command(const Invocation& inv);

/// Text or JSON rendering; deterministic byte-for-byte for equal reports.
std::string render(const Report& report, bool json);

} // namespace qlin
