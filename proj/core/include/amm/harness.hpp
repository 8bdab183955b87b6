#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "amm/matrix.hpp"
#include "amm/pipeline.hpp"

namespace amm {

struct BaselineError {
  std::size_t s = 0;
  double fro_rel = 0.0;
};

/// Measured accuracy of one approximate product against the exact oracle.
/// Nothing here is assumed: delta_met is computed, never forced.
struct ErrorReport {
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  double fro_abs = 0.0;         // |C' - AB|_F
  double fro_rel = 0.0;         // fro_abs / (|A|_F |B|_F), 0 when both vanish
  double probe_residual = 0.0;  // |C'v - u|_2
  double system_residual = 0.0; // |(VᵀV + εI) flatten(C') - Vᵀu|_2
  double x_prime_norm = 0.0;    // |flatten(C')|
  double x_dprime_norm = 0.0;   // closed-form regularized solution
  double x_tprime_norm = 0.0;   // minimum-norm solution of Vc = u
  std::size_t iterations = 0;
  bool converged = true;
  double rho = 0.0;
  double delta_target = 0.0;
  bool delta_met = false;
  double m_prime = 0.0;         // max absolute row sum of AB
  double time_build_s = 0.0;
  double time_solve_s = 0.0;
  double time_exact_s = 0.0;
  double time_iterations_s = 0.0;  // solver loop only; 0 without iterations
  std::vector<BaselineError> baseline;

  /// Loop time over iteration count; the whole solve phase when there were
  /// no iterations (closed form, zero right-hand side).
  double time_per_iteration_s() const noexcept {
    return iterations == 0 ? time_solve_s : time_iterations_s / static_cast<double>(iterations);
  }
};

ErrorReport evaluate(DenseMatrix const& a, DenseMatrix const& b, ApproxConfig const& config,
                     std::optional<std::uint64_t> seed = std::nullopt);

enum class SamplingMode { with_replacement, without_replacement };

/// Column/row sampling estimate of AB from s index draws with uniform
/// probabilities, each sampled outer product scaled by n/s. Without
/// replacement and s = n this is a reordering of the exact sum.
DenseMatrix baseline_sampling(DenseMatrix const& a, DenseMatrix const& b, std::size_t s,
                              std::uint64_t seed,
                              SamplingMode mode = SamplingMode::with_replacement);

double relative_frobenius_error(DenseMatrix const& approx, DenseMatrix const& exact,
                                DenseMatrix const& a, DenseMatrix const& b);

struct SweepSpec {
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  Distribution distribution = Distribution::uniform_signed;
  double max_magnitude = 1.0;
  std::uint64_t seed = 1;
  ApproxConfig config;
  std::vector<std::size_t> baseline_s;
};

struct SizeSummary {
  std::size_t n = 0;
  double median_time_per_iter_s = 0.0;
  std::size_t min_iterations = 0;
  std::size_t max_iterations = 0;
};

/// median per-iteration time at n_to over that at n_from.
struct ScalingRatio {
  std::size_t n_from = 0;
  std::size_t n_to = 0;
  double ratio = 0.0;
};

struct SweepResult {
  std::vector<ErrorReport> runs;
  std::vector<SizeSummary> sizes;
  std::vector<ScalingRatio> scaling;
};

/// Seeds for trial t at size n derive from (spec.seed, n, t) only, so a
/// sweep is reproducible and independent of which other sizes it contains.
std::uint64_t trial_seed(std::uint64_t base, std::size_t n, std::size_t trial) noexcept;

SweepResult sweep(SweepSpec const& spec);

}  // namespace amm
