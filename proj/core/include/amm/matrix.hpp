#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace amm {

/// Dense vector of finite doubles.
class Vector {
 public:
  Vector() = default;
  /// Zero vector of the given dimension.
  explicit Vector(std::size_t dim) : entries_(dim, 0.0) {}
  /// Takes ownership of `entries`; throws InputError on NaN or infinity.
  explicit Vector(std::vector<double> entries);
  Vector(std::initializer_list<double> entries);

  std::size_t dim() const noexcept { return entries_.size(); }

  double operator[](std::size_t i) const noexcept { return entries_[i]; }
  double& operator[](std::size_t i) noexcept { return entries_[i]; }

  std::span<double const> values() const noexcept { return entries_; }
  std::span<double> values() noexcept { return entries_; }

  bool operator==(Vector const&) const = default;

 private:
  std::vector<double> entries_;
};

/// Dense row-major matrix of finite doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero matrix.
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Row-major entries; throws InputError when the length is not
  /// rows * cols or when an entry is not finite.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  /// Nested rows, e.g. `DenseMatrix{{1, 2}, {3, 4}}`. Rows must be equal length.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) noexcept {
    return entries_[i * cols_ + j];
  }

  std::span<double const> row(std::size_t i) const noexcept {
    return std::span<double const>(entries_).subspan(i * cols_, cols_);
  }
  std::span<double const> values() const noexcept { return entries_; }
  std::span<double> values() noexcept { return entries_; }

  DenseMatrix transposed() const;

  bool operator==(DenseMatrix const&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

/// Exact product by the naive triple loop, k ascending for every (i, j).
DenseMatrix matmul_exact(DenseMatrix const& a, DenseMatrix const& b);

/// y = A x, j ascending.
Vector matvec(DenseMatrix const& a, Vector const& x);

double dot(std::span<double const> x, std::span<double const> y) noexcept;

enum class Distribution { uniform_signed, uniform_nonneg, integer_grid, identity, zero };

/// Parses the CLI spelling ("uniform-signed", "integer-grid", ...).
Distribution parse_distribution(std::string_view name);
std::string_view to_string(Distribution d) noexcept;

struct GenSpec {
  std::size_t n = 1;
  Distribution distribution = Distribution::uniform_signed;
  double max_magnitude = 1.0;
  std::uint64_t seed = 0;
};

/// Deterministic n x n test matrix with every |entry| <= max_magnitude.
/// integer-grid draws integers in [-floor(M), floor(M)]; identity needs M >= 1.
DenseMatrix gen_matrix(GenSpec const& spec);

}  // namespace amm
