#include "amm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "amm/error.hpp"
#include "amm/norms.hpp"
#include "amm/random.hpp"

namespace amm {

namespace {

double frobenius_distance(DenseMatrix const& x, DenseMatrix const& y) {
  auto const xv = x.values();
  auto const yv = y.values();
  double sum = 0.0;
  for (std::size_t k = 0; k < xv.size(); ++k) {
    double const d = xv[k] - yv[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t const mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace

double relative_frobenius_error(DenseMatrix const& approx, DenseMatrix const& exact,
                                DenseMatrix const& a, DenseMatrix const& b) {
  double const abs_err = frobenius_distance(approx, exact);
  double const scale = frobenius_norm(a) * frobenius_norm(b);
  if (scale == 0.0) return abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return abs_err / scale;
}

ErrorReport evaluate(DenseMatrix const& a, DenseMatrix const& b, ApproxConfig const& config,
                     std::optional<std::uint64_t> seed) {
  using Clock = std::chrono::steady_clock;
  ApproxResult const approx = approx_multiply(a, b, config);

  auto const t0 = Clock::now();
  DenseMatrix const exact = matmul_exact(a, b);
  auto const t1 = Clock::now();

  ProbeSystem const& system = approx.system;
  ProbeVector const& probe = system.probe;

  ErrorReport r;
  r.n = a.rows();
  r.seed = seed;
  r.fro_abs = frobenius_distance(approx.c_prime, exact);
  r.fro_rel = relative_frobenius_error(approx.c_prime, exact, a, b);

  Vector cv = matvec(approx.c_prime, probe.v());
  for (std::size_t i = 0; i < cv.dim(); ++i) cv[i] -= system.u[i];
  r.probe_residual = norm2(cv.values());

  Vector const c = flatten(approx.c_prime);
  Vector residual = gram_matvec(ImplicitGram(probe), c);
  for (std::size_t k = 0; k < residual.dim(); ++k) residual[k] -= system.y[k];
  r.system_residual = norm2(residual.values());

  r.x_prime_norm = norm2(c.values());
  r.x_dprime_norm = norm2(closed_form_solve(system).values());
  // Minimum-norm solution of Vc = u has blocks u[j] v / λ.
  r.x_tprime_norm = norm2(system.u.values()) * norm2(probe.v().values()) / probe.lambda();

  if (approx.solver_report) {
    r.iterations = approx.solver_report->iterations;
    r.time_iterations_s = approx.solver_report->loop_time.count();
    r.converged = approx.solver_report->terminated_by == Termination::converged;
  }
  r.rho = approx.rho;
  r.delta_target = config.delta;
  r.delta_met = r.fro_abs <= config.delta;
  r.m_prime = inf_norm(exact);
  r.time_build_s = approx.wall_time_build.count();
  r.time_solve_s = approx.wall_time_solve.count();
  r.time_exact_s = std::chrono::duration<double>(t1 - t0).count();
  return r;
}

DenseMatrix baseline_sampling(DenseMatrix const& a, DenseMatrix const& b, std::size_t s,
                              std::uint64_t seed, SamplingMode mode) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw InputError("baseline_sampling: A and B must be square and of equal size");
  }
  std::size_t const n = a.rows();
  if (s < 1 || s > n) {
    throw InputError("baseline_sampling: s = " + std::to_string(s) + " outside [1, " +
                     std::to_string(n) + "]");
  }

  Rng rng(seed);
  std::vector<std::size_t> picks(s);
  if (mode == SamplingMode::with_replacement) {
    for (auto& k : picks) k = static_cast<std::size_t>(rng.below(n));
  } else {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = 0; i < s; ++i) {
      std::size_t const j = i + static_cast<std::size_t>(rng.below(n - i));
      std::swap(perm[i], perm[j]);
    }
    std::copy_n(perm.begin(), s, picks.begin());
  }

  // Each draw has probability 1/n, so the importance weight is 1/(s * 1/n).
  double const weight = static_cast<double>(n) / static_cast<double>(s);
  DenseMatrix result(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto out = result.values().subspan(i * n, n);
    for (std::size_t k : picks) {
      double const aik = weight * a(i, k);
      auto brow = b.row(k);
      for (std::size_t j = 0; j < n; ++j) out[j] += aik * brow[j];
    }
  }
  return result;
}

std::uint64_t trial_seed(std::uint64_t base, std::size_t n, std::size_t trial) noexcept {
  return derive_seed(base, n, trial);
}

SweepResult sweep(SweepSpec const& spec) {
  if (spec.sizes.empty()) throw InputError("sweep: sizes must be nonempty");
  if (!std::is_sorted(spec.sizes.begin(), spec.sizes.end()) ||
      std::adjacent_find(spec.sizes.begin(), spec.sizes.end()) != spec.sizes.end()) {
    throw InputError("sweep: sizes must be strictly ascending");
  }
  if (spec.sizes.front() == 0) throw InputError("sweep: sizes must be >= 1");
  if (spec.trials == 0) throw InputError("sweep: trials must be >= 1");
  for (std::size_t s : spec.baseline_s) {
    if (s < 1 || s > spec.sizes.front()) {
      throw InputError("sweep: baseline s = " + std::to_string(s) +
                       " outside [1, smallest size]");
    }
  }

  SweepResult result;
  for (std::size_t n : spec.sizes) {
    std::vector<double> per_iter;
    SizeSummary summary{n, 0.0, std::size_t(-1), 0};
    for (std::size_t t = 0; t < spec.trials; ++t) {
      std::uint64_t const seed = trial_seed(spec.seed, n, t);
      GenSpec gen{n, spec.distribution, spec.max_magnitude, seed};
      DenseMatrix const a = gen_matrix(gen);
      gen.seed = mix_seed(seed ^ 0xb);
      DenseMatrix const b = gen_matrix(gen);

      ErrorReport report = evaluate(a, b, spec.config, seed);
      if (!spec.baseline_s.empty()) {
        DenseMatrix const exact = matmul_exact(a, b);
        for (std::size_t s : spec.baseline_s) {
          DenseMatrix const approx = baseline_sampling(a, b, s, derive_seed(seed, s, 0x5a));
          report.baseline.push_back({s, relative_frobenius_error(approx, exact, a, b)});
        }
      }
      per_iter.push_back(report.time_per_iteration_s());
      summary.min_iterations = std::min(summary.min_iterations, report.iterations);
      summary.max_iterations = std::max(summary.max_iterations, report.iterations);
      result.runs.push_back(std::move(report));
    }
    summary.median_time_per_iter_s = median(std::move(per_iter));
    result.sizes.push_back(summary);
  }

  for (std::size_t k = 1; k < result.sizes.size(); ++k) {
    auto const& prev = result.sizes[k - 1];
    auto const& cur = result.sizes[k];
    double const ratio =
        prev.median_time_per_iter_s > 0.0 ? cur.median_time_per_iter_s / prev.median_time_per_iter_s : 0.0;
    result.scaling.push_back({prev.n, cur.n, ratio});
  }
  return result;
}

}  // namespace amm
