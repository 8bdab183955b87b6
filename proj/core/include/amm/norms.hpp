#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

#include "amm/matrix.hpp"

namespace amm {

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

/// (sum |x_i|^p)^(1/p), or max |x_i| for p = kInfinityNorm. Throws
/// InputError for p < 1.
double vec_p_norm(std::span<double const> x, double p);
inline double vec_p_norm(Vector const& x, double p) { return vec_p_norm(x.values(), p); }

inline double norm2(std::span<double const> x) { return vec_p_norm(x, 2.0); }

double frobenius_norm(DenseMatrix const& a);
/// Maximum absolute row sum.
double inf_norm(DenseMatrix const& a);
/// Maximum absolute entry.
double max_norm(DenseMatrix const& a);

struct SpectralEstimate {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

struct PowerIterationOptions {
  double tol = 1e-12;
  std::size_t max_iters = 10000;
  std::uint64_t seed = 0x5eed;
};

/// Power-iteration estimate of max |eigenvalue| for a symmetric matrix.
///
/// Iterates x <- A x / |A x| from a seeded random start and tracks |A x|,
/// the square root of the Rayleigh quotient of A^2. That sequence is
/// nondecreasing for symmetric A and converges to the spectral radius even
/// when the dominant eigenvalues are +/- the same magnitude. Stops when two
/// successive estimates differ by at most tol * estimate.
///
/// Throws InputError when A is not square or not symmetric to 1e-12.
SpectralEstimate spectral_radius_symmetric(DenseMatrix const& a,
                                           PowerIterationOptions const& options = {});

/// Induced 2-norm of a symmetric matrix, which equals its spectral radius.
SpectralEstimate operator_2_norm_symmetric(DenseMatrix const& a,
                                           PowerIterationOptions const& options = {});

bool is_symmetric(DenseMatrix const& a, double tol = 1e-12) noexcept;

}  // namespace amm
