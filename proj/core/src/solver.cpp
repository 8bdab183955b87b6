#include "amm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amm/error.hpp"

namespace amm {

LinearOperator LinearOperator::from_dense(DenseMatrix a) {
  if (!a.is_square()) throw InputError("LinearOperator::from_dense: matrix is not square");
  std::size_t const dim = a.rows();
  return LinearOperator(dim, [m = std::move(a)](std::span<double const> x, std::span<double> out) {
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(m.row(i), x);
  });
}

std::string_view to_string(Termination t) noexcept {
  return t == Termination::converged ? "converged" : "max_iters";
}

namespace {

void validate(SolverConfig const& config) {
  if (!(config.rho > 0.0)) throw InputError("steepest_descent: rho must be positive");
  if (config.max_iters < 1) throw InputError("steepest_descent: max_iters must be >= 1");
  if (auto const* fixed = std::get_if<FixedStep>(&config.step)) {
    if (!(fixed->lambda_min > 0.0) || !(fixed->lambda_max >= fixed->lambda_min)) {
      throw InputError("steepest_descent: fixed step needs 0 < lambda_min <= lambda_max");
    }
  }
}

}  // namespace

SolverReport steepest_descent(LinearOperator const& op, Vector const& b,
                              SolverConfig const& config) {
  validate(config);
  std::size_t const d = op.dim();
  if (b.dim() != d) {
    throw InputError("steepest_descent: right-hand side has dimension " +
                     std::to_string(b.dim()) + ", operator has " + std::to_string(d));
  }

  auto const* fixed = std::get_if<FixedStep>(&config.step);
  double const fixed_alpha = fixed ? 2.0 / (fixed->lambda_max + fixed->lambda_min) : 0.0;

  SolverReport report;
  report.solution = Vector(d);
  auto x = report.solution.values();
  std::vector<double> r(b.values().begin(), b.values().end());
  std::vector<double> ar(d), next(d);

  // r <- b - Âx, spending one application; returns r·r.
  auto const recompute_residual = [&] {
    op.apply(x, ar);
    ++report.operator_applications;
    auto const bv = b.values();
    double sq = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      r[k] = bv[k] - ar[k];
      sq += r[k] * r[k];
    }
    return sq;
  };

  auto const loop_start = std::chrono::steady_clock::now();
  double rr = dot(r, r);
  double rnorm = std::sqrt(rr);
  report.residual_history.push_back(rnorm);
  bool fresh = true;  // r equals b - Âx up to one rounding

  while (true) {
    if (rnorm <= config.rho) {
      if (fresh || report.operator_applications >= config.max_iters) {
        report.terminated_by = Termination::converged;
        break;
      }
      rr = recompute_residual();
      rnorm = std::sqrt(rr);
      fresh = true;
      report.residual_history.back() = rnorm;
      continue;
    }
    if (report.iterations >= config.max_iters ||
        report.operator_applications >= config.max_iters) {
      report.terminated_by = Termination::max_iters;
      break;
    }

    op.apply(r, ar);
    ++report.operator_applications;
    double const rar = dot(r, ar);
    if (!std::isfinite(rar)) {
      throw SolverError(SolverError::Kind::divergence,
                        "steepest_descent: non-finite curvature at iteration " +
                            std::to_string(report.iterations));
    }
    if (!(rar > 0.0)) {
      throw SolverError(SolverError::Kind::not_positive_definite,
                        "steepest_descent: r.Ar = " + std::to_string(rar) +
                            " <= 0 at iteration " + std::to_string(report.iterations) +
                            "; operator is not positive definite");
    }
    double const alpha = fixed ? fixed_alpha : rr / rar;

    double next_rr = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      x[k] += alpha * r[k];
      next[k] = r[k] - alpha * ar[k];
      next_rr += next[k] * next[k];
    }
    if (config.observer) {
      config.observer(IterationView{report.iterations, alpha, x, r, next});
    }
    r.swap(next);
    rr = next_rr;
    ++report.iterations;
    fresh = false;

    if (config.residual_refresh != 0 && report.iterations % config.residual_refresh == 0 &&
        report.operator_applications < config.max_iters) {
      rr = recompute_residual();
      fresh = true;
    }

    rnorm = std::sqrt(rr);
    if (!std::isfinite(rnorm)) {
      throw SolverError(SolverError::Kind::divergence,
                        "steepest_descent: residual is not finite at iteration " +
                            std::to_string(report.iterations));
    }
    report.residual_history.push_back(rnorm);
    report.alpha_history.push_back(alpha);
  }
  report.loop_time = std::chrono::steady_clock::now() - loop_start;
  return report;
}

Vector closed_form_solve(ProbeSystem const& system) {
  ProbeVector const& probe = system.probe;
  std::size_t const n = probe.n();
  if (system.u.dim() != n) {
    throw InputError("closed_form_solve: u has dimension " + std::to_string(system.u.dim()) +
                     ", expected " + std::to_string(n));
  }
  // Every block right-hand side u[j] v is an eigenvector of v vᵀ + εI with
  // eigenvalue λ + ε, so the Sherman–Morrison inverse collapses to a scaling.
  auto const v = probe.v().values();
  double const scale = 1.0 / (probe.lambda() + probe.epsilon());
  Vector c(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    double const cj = system.u[j] * scale;
    for (std::size_t k = 0; k < n; ++k) c[j * n + k] = cj * v[k];
  }
  return c;
}

Vector sherman_morrison_block_solve(ProbeVector const& probe, Vector const& y) {
  std::size_t const n = probe.n();
  if (y.dim() != n * n) {
    throw InputError("sherman_morrison_block_solve: right-hand side has dimension " +
                     std::to_string(y.dim()) + ", expected " + std::to_string(n * n));
  }
  auto const v = probe.v().values();
  double const eps = probe.epsilon();
  // (v vᵀ + εI)^-1 = I/ε - v vᵀ / (ε² (1 + λ/ε))
  double const correction = 1.0 / (eps * eps * (1.0 + probe.lambda() / eps));

  Vector c(n * n);
  auto const yv = y.values();
  for (std::size_t j = 0; j < n; ++j) {
    auto const yj = yv.subspan(j * n, n);
    double const proj = dot(v, yj);
    for (std::size_t k = 0; k < n; ++k) c[j * n + k] = yj[k] / eps - correction * v[k] * proj;
  }
  return c;
}

std::size_t default_max_iters(double kappa, double rho) {
  double const steps = kappa * std::log(1.0 / rho) + 1.0;
  double const capped = std::clamp(std::ceil(steps), 1.0, 1e15);
  return 10 * static_cast<std::size_t>(capped);
}

}  // namespace amm
