#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>

#include "amm/matrix.hpp"
#include "amm/probe.hpp"
#include "amm/solver.hpp"

namespace amm {

enum class SolverKind { adaptive, fixed, closed_form };

/// CLI spellings: "sd", "sd-fixed", "closed".
SolverKind parse_solver_kind(std::string_view name);
std::string_view to_string(SolverKind kind) noexcept;

/// rho = delta / 1.001.
double default_rho_rule(double delta);

struct ApproxConfig {
  double delta = 1e-6;
  ProbeSchedule schedule = PaperSchedule{};
  SolverKind solver = SolverKind::adaptive;
  std::function<double(double)> rho_rule = default_rho_rule;
  /// Defaults to default_max_iters(condition_bound, rho).
  std::optional<std::size_t> max_iters;
  /// When set, inputs with an entry above this magnitude are rejected.
  std::optional<double> magnitude_bound;

  double rho() const;
};

struct ApproxResult {
  DenseMatrix c_prime;
  /// Absent for the closed-form solver.
  std::optional<SolverReport> solver_report;
  ProbeSystem system;
  double rho = 0.0;
  std::chrono::duration<double> wall_time_build{};
  std::chrono::duration<double> wall_time_solve{};
};

/// probe -> u = ABv, y = Vᵀu -> solve (VᵀV + εI) c = y -> reshape c into C'.
/// Runs in O(n²) per solver iteration and never forms AB.
ApproxResult approx_multiply(DenseMatrix const& a, DenseMatrix const& b,
                             ApproxConfig const& config);

/// Row-major: entries i*n .. i*n+n-1 of c become row i.
DenseMatrix reshape_solution(Vector const& c, std::size_t n);
Vector flatten(DenseMatrix const& m);

}  // namespace amm
