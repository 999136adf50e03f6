#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "accinfo/model.hpp"
#include "accinfo/optimizer.hpp"

namespace accinfo {

/// Parsed import file: three header lines (N, J, K) followed by one matrix
/// per line for each statistical operator.
struct ImportFile {
    int dim = 0;      // N
    int num_ops = 0;  // J
    int k_init = 0;   // K
    std::vector<CMatrix> ops;
};

/// One complex entry. Accepted forms: "0.6", "0.3+0.5I", "-3.1-4.5I",
/// "0.5I", "I", "-I", with integer, fixed or scientific coefficients.
/// The imaginary unit must be upper-case I and must end the entry.
/// Throws ParseError with the byte offset of the problem.
Complex parse_complex(std::string_view token);

/// One matrix per line as nested braces: {{a,b},{c,d}}. Rows are
/// comma-separated brace groups of comma-separated entries; whitespace
/// between tokens is ignored. Rows must all have the same length and the
/// matrix must be square.
CMatrix parse_matrix(std::string_view line);

/// Whole import file. The three header lines are `name = integer` in the
/// order N, J, K; only the value after the equal sign is read. Blank lines
/// are skipped. Throws ParseError / CountMismatch / DimensionMismatch.
ImportFile parse_import(std::string_view text);

/// Inverse of parse_import. Stable: writing a parsed file reproduces it
/// byte for byte.
std::string write_import(const ImportFile& f);

/// 17-significant-digit entry, imaginary part only when nonzero.
std::string format_complex(Complex z);

/// One-line nested-brace form, no interior whitespace.
std::string format_matrix(const CMatrix& m);

/// Full result file: six header lines (J, K, N, steepest_prob, tolerance,
/// seed), the per-iteration mutual-information block, the statistical
/// operators, the final POVM outcomes, and the reduced POVM outcomes,
/// blocks separated by blank lines. LF line endings.
std::string write_output(const RunReport& report, const Ensemble& e,
                         const OptimizerConfig& cfg);

/// Machine-readable mirror of the result file (JSON, schema in README).
std::string write_json_report(const RunReport& report, const Ensemble& e);

}  // namespace accinfo
