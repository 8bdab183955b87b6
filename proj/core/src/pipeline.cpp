#include "amm/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "amm/error.hpp"
#include "amm/norms.hpp"

namespace amm {

SolverKind parse_solver_kind(std::string_view name) {
  if (name == "sd") return SolverKind::adaptive;
  if (name == "sd-fixed") return SolverKind::fixed;
  if (name == "closed") return SolverKind::closed_form;
  throw InputError("unknown solver '" + std::string(name) + "' (expected sd, sd-fixed, closed)");
}

std::string_view to_string(SolverKind kind) noexcept {
  switch (kind) {
    case SolverKind::adaptive: return "sd";
    case SolverKind::fixed: return "sd-fixed";
    case SolverKind::closed_form: return "closed";
  }
  return "?";
}

double default_rho_rule(double delta) { return delta / 1.001; }

double ApproxConfig::rho() const {
  if (!(delta > 0.0)) throw InputError("approx_multiply: delta must be positive");
  double const r = rho_rule ? rho_rule(delta) : default_rho_rule(delta);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InputError("approx_multiply: rho derived from delta must be positive");
  }
  return r;
}

namespace {

void check_inputs(DenseMatrix const& a, DenseMatrix const& b, ApproxConfig const& config) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw InputError("approx_multiply: A and B must be square and of equal size (got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  }
  if (a.rows() == 0) throw InputError("approx_multiply: empty matrices");
  if (config.magnitude_bound) {
    double const bound = *config.magnitude_bound;
    if (max_norm(a) > bound || max_norm(b) > bound) {
      throw InputError("approx_multiply: an input entry exceeds the magnitude bound " +
                       std::to_string(bound));
    }
  }
}

}  // namespace

ApproxResult approx_multiply(DenseMatrix const& a, DenseMatrix const& b,
                             ApproxConfig const& config) {
  using Clock = std::chrono::steady_clock;
  check_inputs(a, b, config);
  double const rho = config.rho();
  std::size_t const n = a.rows();

  auto const t0 = Clock::now();
  ProbeSystem system = compute_rhs(a, b, build_probe(n, config.schedule));
  auto const t1 = Clock::now();

  bool const u_is_zero =
      std::all_of(system.u.values().begin(), system.u.values().end(), [](double x) { return x == 0.0; });

  std::optional<SolverReport> report;
  Vector c;
  if (config.solver == SolverKind::closed_form) {
    c = u_is_zero ? Vector(n * n) : closed_form_solve(system);
  } else if (u_is_zero) {
    // The regularized system has the unique solution 0.
    SolverReport zero;
    zero.solution = Vector(n * n);
    zero.residual_history = {0.0};
    zero.terminated_by = Termination::converged;
    report = std::move(zero);
    c = report->solution;
  } else {
    ImplicitGram const gram(system.probe);
    double const lmax = system.probe.lambda() + system.probe.epsilon();
    double const lmin = system.probe.epsilon();
    SolverConfig sc;
    sc.rho = rho;
    sc.max_iters = config.max_iters.value_or(default_max_iters(lmax / lmin, rho));
    if (config.solver == SolverKind::fixed) sc.step = FixedStep{lmax, lmin};
    try {
      report = steepest_descent(gram.as_operator(), system.y, sc);
    } catch (SolverError const& e) {
      throw SolverError(e.kind(), "approx_multiply(n=" + std::to_string(n) + ", solver=" +
                                      std::string(to_string(config.solver)) + "): " + e.what());
    }
    c = report->solution;
  }
  auto const t2 = Clock::now();

  ApproxResult result{reshape_solution(c, n), std::move(report), std::move(system), rho, {}, {}};
  result.wall_time_build = t1 - t0;
  result.wall_time_solve = t2 - t1;
  return result;
}

DenseMatrix reshape_solution(Vector const& c, std::size_t n) {
  if (c.dim() != n * n) {
    throw InputError("reshape_solution: vector has dimension " + std::to_string(c.dim()) +
                     ", expected " + std::to_string(n * n));
  }
  auto const values = c.values();
  return DenseMatrix(n, n, std::vector<double>(values.begin(), values.end()));
}

Vector flatten(DenseMatrix const& m) {
  auto const values = m.values();
  return Vector(std::vector<double>(values.begin(), values.end()));
}

}  // namespace amm
