#include "amm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "amm/error.hpp"
#include "amm/random.hpp"

namespace amm {

double vec_p_norm(std::span<double const> x, double p) {
  if (!(p >= 1.0)) throw InputError("vec_p_norm: p must be >= 1, got " + std::to_string(p));
  double largest = 0.0;
  for (double xi : x) largest = std::max(largest, std::abs(xi));
  if (p == kInfinityNorm || largest == 0.0) return largest;

  // Scale by the largest magnitude so |x_i|^p cannot overflow or underflow.
  double sum = 0.0;
  if (p == 2.0) {
    for (double xi : x) {
      double const t = xi / largest;
      sum += t * t;
    }
    return largest * std::sqrt(sum);
  }
  for (double xi : x) sum += std::pow(std::abs(xi) / largest, p);
  return largest * std::pow(sum, 1.0 / p);
}

double frobenius_norm(DenseMatrix const& a) {
  double sum = 0.0;
  for (double e : a.values()) sum += e * e;
  return std::sqrt(sum);
}

double inf_norm(DenseMatrix const& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (double e : a.row(i)) s += std::abs(e);
    best = std::max(best, s);
  }
  return best;
}

double max_norm(DenseMatrix const& a) {
  double best = 0.0;
  for (double e : a.values()) best = std::max(best, std::abs(e));
  return best;
}

bool is_symmetric(DenseMatrix const& a, double tol) noexcept {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = i + 1; j < a.cols(); ++j) {
      double const scale = std::max({1.0, std::abs(a(i, j)), std::abs(a(j, i))});
      if (std::abs(a(i, j) - a(j, i)) > tol * scale) return false;
    }
  }
  return true;
}

SpectralEstimate spectral_radius_symmetric(DenseMatrix const& a,
                                           PowerIterationOptions const& options) {
  if (!a.is_square()) throw InputError("spectral_radius_symmetric: matrix is not square");
  if (!is_symmetric(a)) throw InputError("spectral_radius_symmetric: matrix is not symmetric");
  if (options.max_iters == 0) throw InputError("spectral_radius_symmetric: max_iters must be >= 1");

  std::size_t const n = a.rows();
  SpectralEstimate result;
  if (n == 0) {
    result.converged = true;
    return result;
  }

  Rng rng(options.seed);
  std::vector<double> x(n), y(n);
  for (double& xi : x) xi = rng.uniform_signed();
  double const start_norm = norm2(x);
  for (double& xi : x) xi /= start_norm;

  double previous = 0.0;
  for (std::size_t k = 1; k <= options.max_iters; ++k) {
    for (std::size_t i = 0; i < n; ++i) y[i] = dot(a.row(i), x);
    double const estimate = norm2(y);
    result.value = estimate;
    result.iterations = k;
    if (estimate == 0.0) {
      result.converged = true;
      return result;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / estimate;
    if (k > 1 && std::abs(estimate - previous) <= options.tol * estimate) {
      result.converged = true;
      return result;
    }
    previous = estimate;
  }
  return result;
}

SpectralEstimate operator_2_norm_symmetric(DenseMatrix const& a,
                                           PowerIterationOptions const& options) {
  return spectral_radius_symmetric(a, options);
}

}  // namespace amm
