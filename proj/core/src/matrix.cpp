#include "amm/matrix.hpp"

#include <cmath>
#include <string>

#include "amm/error.hpp"
#include "amm/random.hpp"

namespace amm {

namespace {

void require_finite(std::span<double const> values, char const* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InputError(std::string(what) + ": entry " + std::to_string(i) +
                       " is not finite");
    }
  }
}

}  // namespace

Vector::Vector(std::vector<double> entries) : entries_(std::move(entries)) {
  require_finite(entries_, "Vector");
}

Vector::Vector(std::initializer_list<double> entries) : entries_(entries) {
  require_finite(entries_, "Vector");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw InputError("DenseMatrix: " + std::to_string(entries_.size()) +
                     " entries for a " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " matrix");
  }
  require_finite(entries_, "DenseMatrix");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (auto const& r : rows) {
    if (r.size() != cols_) throw InputError("DenseMatrix: ragged initializer rows");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
  require_finite(entries_, "DenseMatrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix matmul_exact(DenseMatrix const& a, DenseMatrix const& b) {
  if (a.cols() != b.rows()) {
    throw InputError("matmul_exact: inner dimensions differ (" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + ")");
  }
  std::size_t const n = a.rows(), m = b.cols(), inner = a.cols();
  DenseMatrix c(n, m);
  // i-k-j order keeps B row access contiguous while each c(i, j) still
  // accumulates its terms with k ascending.
  for (std::size_t i = 0; i < n; ++i) {
    auto crow = c.values().subspan(i * m, m);
    for (std::size_t k = 0; k < inner; ++k) {
      double const aik = a(i, k);
      auto brow = b.row(k);
      for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Vector matvec(DenseMatrix const& a, Vector const& x) {
  if (a.cols() != x.dim()) {
    throw InputError("matvec: matrix has " + std::to_string(a.cols()) +
                     " columns, vector has dimension " + std::to_string(x.dim()));
  }
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x.values());
  return y;
}

double dot(std::span<double const> x, std::span<double const> y) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform-signed") return Distribution::uniform_signed;
  if (name == "uniform-nonneg") return Distribution::uniform_nonneg;
  if (name == "integer-grid") return Distribution::integer_grid;
  if (name == "identity") return Distribution::identity;
  if (name == "zero") return Distribution::zero;
  throw InputError("unknown distribution '" + std::string(name) + "'");
}

std::string_view to_string(Distribution d) noexcept {
  switch (d) {
    case Distribution::uniform_signed: return "uniform-signed";
    case Distribution::uniform_nonneg: return "uniform-nonneg";
    case Distribution::integer_grid: return "integer-grid";
    case Distribution::identity: return "identity";
    case Distribution::zero: return "zero";
  }
  return "?";
}

DenseMatrix gen_matrix(GenSpec const& spec) {
  if (spec.n == 0) throw InputError("gen_matrix: n must be at least 1");
  if (!(spec.max_magnitude >= 0.0) || !std::isfinite(spec.max_magnitude)) {
    throw InputError("gen_matrix: magnitude bound must be finite and nonnegative");
  }
  std::size_t const n = spec.n;
  double const bound = spec.max_magnitude;
  Rng rng(spec.seed);
  DenseMatrix m(n, n);
  auto values = m.values();

  switch (spec.distribution) {
    case Distribution::uniform_signed:
      for (double& e : values) e = bound * rng.uniform_signed();
      break;
    case Distribution::uniform_nonneg:
      for (double& e : values) e = bound * rng.uniform01();
      break;
    case Distribution::integer_grid: {
      auto const k = static_cast<std::uint64_t>(std::floor(bound));
      for (double& e : values)
        e = static_cast<double>(rng.below(2 * k + 1)) - static_cast<double>(k);
      break;
    }
    case Distribution::identity:
      if (bound < 1.0) throw InputError("gen_matrix: identity needs a magnitude bound >= 1");
      m = DenseMatrix::identity(n);
      break;
    case Distribution::zero:
      break;
  }
  return m;
}

}  // namespace amm
