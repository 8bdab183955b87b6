#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "amm/matrix.hpp"

namespace amm {

/// One matrix row per line, comma-separated decimal fields. Values are
/// written in shortest round-trippable form, so write-then-read is exact.
void write_matrix_csv(DenseMatrix const& a, std::ostream& out);
void write_matrix_csv(DenseMatrix const& a, std::filesystem::path const& path);

/// Throws ParseError (with 1-based line and field) on ragged rows,
/// non-numeric or non-finite fields, and empty input. `source` only labels
/// error messages.
DenseMatrix parse_matrix_csv(std::string_view text, std::string const& source = "<input>");
DenseMatrix read_matrix_csv(std::filesystem::path const& path);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace amm
