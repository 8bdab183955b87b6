#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "amm/csv.hpp"
#include "amm/error.hpp"
#include "support/oracles.hpp"

using namespace amm;

namespace {

ParseError parse_failure(std::string_view text) {
  try {
    parse_matrix_csv(text);
  } catch (ParseError const& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("identity survives a file round trip") {
  auto const path = std::filesystem::temp_directory_path() / "amm_csv_identity.csv";
  write_matrix_csv(DenseMatrix::identity(2), path);
  CHECK(read_matrix_csv(path) == DenseMatrix::identity(2));
  std::filesystem::remove(path);
}

TEST_CASE("random doubles round-trip bit for bit") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t const rows = 1 + rng.below(6), cols = 1 + rng.below(6);
    DenseMatrix a(rows, cols);
    for (double& e : a.values()) e = std::ldexp(rng.uniform_signed(), int(rng.below(80)) - 40);
    std::ostringstream out;
    write_matrix_csv(a, out);
    CHECK(parse_matrix_csv(out.str()) == a);
  }
}

TEST_CASE("parse errors name the line and field") {
  auto ragged = parse_failure("1,2\n3");
  CHECK(ragged.line() == 2);

  auto bad = parse_failure("1,x\n0,1");
  CHECK(bad.line() == 1);
  CHECK(bad.field() == 2);

  CHECK(parse_failure("").line() == 1);
  CHECK(parse_failure("\n\n").line() == 1);
  CHECK(parse_failure("1,2\n\n3,4\n").line() == 2);
  CHECK(parse_failure("1,inf").field() == 2);
  CHECK(parse_failure("1,,2").field() == 2);
  CHECK(parse_failure("1.5e").field() == 1);
}

TEST_CASE("parser tolerates whitespace, CRLF and trailing newlines") {
  CHECK(parse_matrix_csv(" 1, +2\r\n3 ,4\r\n\n") == DenseMatrix{{1, 2}, {3, 4}});
  CHECK(parse_matrix_csv("-0.5") == DenseMatrix{{-0.5}});
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(read_matrix_csv("/nonexistent/dir/m.csv"), IoError);
}
