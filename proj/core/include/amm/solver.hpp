#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "amm/matrix.hpp"
#include "amm/probe.hpp"

namespace amm {

/// Type-erased square linear operator on R^dim.
class LinearOperator {
 public:
  using ApplyFn = std::function<void(std::span<double const>, std::span<double>)>;

  LinearOperator(std::size_t dim, ApplyFn apply) : dim_(dim), apply_(std::move(apply)) {}

  /// Wraps a square dense matrix.
  static LinearOperator from_dense(DenseMatrix a);

  std::size_t dim() const noexcept { return dim_; }
  void apply(std::span<double const> x, std::span<double> out) const { apply_(x, out); }

 private:
  std::size_t dim_;
  ApplyFn apply_;
};

/// alpha_i = r·r / r·Âr.
struct AdaptiveStep {};
/// alpha = 2 / (lambda_max + lambda_min).
struct FixedStep {
  double lambda_max = 1.0;
  double lambda_min = 1.0;
};
using StepRule = std::variant<AdaptiveStep, FixedStep>;

/// Snapshot handed to SolverConfig::observer after each update. `residual`
/// is r_i and `next_residual` the incrementally updated r_{i+1}, before any
/// periodic recomputation.
struct IterationView {
  std::size_t index;
  double alpha;
  std::span<double const> x;
  std::span<double const> residual;
  std::span<double const> next_residual;
};

struct SolverConfig {
  double rho = 1e-10;
  std::size_t max_iters = 1000;
  StepRule step = AdaptiveStep{};
  /// Recompute r = b - Âx from scratch every this many iterations (0: never).
  std::size_t residual_refresh = 50;
  std::function<void(IterationView const&)> observer;
};

enum class Termination { converged, max_iters };
std::string_view to_string(Termination t) noexcept;

struct SolverReport {
  Vector solution;
  std::size_t iterations = 0;
  /// Includes refreshes and the final residual confirmation; never exceeds
  /// max_iters.
  std::size_t operator_applications = 0;
  /// |b - Âx_i|_2 for i = 0 .. iterations.
  std::vector<double> residual_history;
  std::vector<double> alpha_history;
  Termination terminated_by = Termination::max_iters;
  /// Wall time of the iteration loop alone, excluding workspace setup.
  std::chrono::duration<double> loop_time{};
};

/// Steepest descent from x_0 = 0 for a symmetric positive definite operator.
///
/// Each iteration costs one operator application: r_{i+1} = r_i - alpha_i Âr_i.
/// When the incremental residual drops to rho it is confirmed against
/// b - Âx before reporting convergence. Throws SolverError when r·Âr <= 0
/// or an iterate stops being finite, InputError on a bad config or shape.
SolverReport steepest_descent(LinearOperator const& op, Vector const& b,
                              SolverConfig const& config);

/// Exact solution of (VᵀV + εI) c = Vᵀu, blockwise c_j = u[j] / (λ + ε) v.
Vector closed_form_solve(ProbeSystem const& system);

/// Solves (VᵀV + εI) c = y for an arbitrary y by applying the
/// Sherman–Morrison inverse (v vᵀ + εI)^-1 = I/ε - v vᵀ / (ε² + ελ) per block.
/// Loses accuracy when ε << λ; closed_form_solve is the stable route for
/// probe systems.
Vector sherman_morrison_block_solve(ProbeVector const& probe, Vector const& y);

/// 10 * ceil(kappa * ln(1/rho) + 1), at least 10; the ceiling is capped at 1e15.
std::size_t default_max_iters(double kappa, double rho);

}  // namespace amm
