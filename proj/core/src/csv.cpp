#include "amm/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "amm/error.hpp"

namespace amm {

ParseError::ParseError(std::string const& source, std::size_t line, std::size_t field,
                       std::string const& what)
    : InputError(source + ":" + std::to_string(line) +
                 (field ? " field " + std::to_string(field) : std::string()) + ": " + what),
      line_(line),
      field_(field) {}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw Error("format_double: to_chars failed");
  return std::string(buf, end);
}

void write_matrix_csv(DenseMatrix const& a, std::ostream& out) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto row = a.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << format_double(row[j]);
    }
    out << '\n';
  }
}

void write_matrix_csv(DenseMatrix const& a, std::filesystem::path const& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_matrix_csv(a, out);
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

DenseMatrix parse_matrix_csv(std::string_view text, std::string const& source) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto const nl = text.find('\n');
    lines.push_back(text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  // Trailing blank lines are tolerated; interior ones are ragged rows.
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(source, 1, 0, "empty matrix file");

  std::size_t cols = 0;
  std::vector<double> entries;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::string_view line = lines[li];
    std::size_t field = 0;
    std::size_t count = 0;
    while (true) {
      auto const comma = line.find(',');
      std::string_view const raw = trim(line.substr(0, comma));
      ++field;
      double value = 0.0;
      auto const* first = raw.data();
      auto const* last = raw.data() + raw.size();
      if (!raw.empty() && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (raw.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError(source, li + 1, field,
                         "'" + std::string(raw) + "' is not a number");
      }
      if (!std::isfinite(value)) {
        throw ParseError(source, li + 1, field, "non-finite value '" + std::string(raw) + "'");
      }
      entries.push_back(value);
      ++count;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (li == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError(source, li + 1, 0,
                       "row has " + std::to_string(count) + " fields, expected " +
                           std::to_string(cols));
    }
  }
  return DenseMatrix(lines.size(), cols, std::move(entries));
}

DenseMatrix read_matrix_csv(std::filesystem::path const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix_csv(buf.str(), path.string());
}

}  // namespace amm
