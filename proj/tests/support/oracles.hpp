#pragma once

// Test-only reference computations. Everything here goes through Eigen or
// plain loops and never through the library routines it is used to check.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "amm/matrix.hpp"
#include "amm/random.hpp"

namespace amm::testing {

inline Eigen::MatrixXd to_eigen(DenseMatrix const& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  return m;
}

inline Eigen::VectorXd to_eigen(Vector const& x) {
  Eigen::VectorXd v(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) v(i) = x[i];
  return v;
}

inline DenseMatrix from_eigen(Eigen::MatrixXd const& m) {
  DenseMatrix a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
  return a;
}

inline Vector from_eigen(Eigen::VectorXd const& v) {
  Vector x(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) x[i] = v(i);
  return x;
}

/// Block-diagonal VᵀV + εI assembled with Eigen outer products.
inline Eigen::MatrixXd gram_oracle(Vector const& v, double eps) {
  auto const n = static_cast<Eigen::Index>(v.dim());
  Eigen::VectorXd ve = to_eigen(v);
  Eigen::MatrixXd block = ve * ve.transpose() + eps * Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n * n, n * n);
  for (Eigen::Index j = 0; j < n; ++j) g.block(j * n, j * n, n, n) = block;
  return g;
}

/// Exact eigenvalues of a symmetric matrix, ascending.
inline Eigen::VectorXd symmetric_eigenvalues(DenseMatrix const& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(a), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline double spectral_radius_oracle(DenseMatrix const& a) {
  return symmetric_eigenvalues(a).cwiseAbs().maxCoeff();
}

inline DenseMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng,
                                 double scale = 1.0) {
  DenseMatrix a(rows, cols);
  for (double& e : a.values()) e = scale * rng.uniform_signed();
  return a;
}

inline DenseMatrix random_symmetric(std::size_t n, Rng& rng) {
  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = rng.uniform_signed();
  return a;
}

inline Vector random_vector(std::size_t n, Rng& rng, double scale = 1.0) {
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = scale * rng.uniform_signed();
  return x;
}

/// Random nonzero vector with entries bounded away from zero overall.
inline Vector random_probe_vector(std::size_t n, Rng& rng) {
  Vector v = random_vector(n, rng);
  v[0] += v[0] >= 0 ? 0.25 : -0.25;
  return v;
}

inline double distance2(Eigen::VectorXd const& a, Vector const& b) {
  return (a - to_eigen(b)).norm();
}

}  // namespace amm::testing
