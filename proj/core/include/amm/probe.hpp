#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>

#include "amm/matrix.hpp"

namespace amm {

class LinearOperator;

/// The probe v multiplied into AB = C, together with the regularization
/// epsilon and lambda = sum v_i^2 (the only nonzero eigenvalue of v v^T).
class ProbeVector {
 public:
  /// Throws InputError when v is empty or zero, or epsilon is not positive.
  ProbeVector(Vector v, double epsilon);

  std::size_t n() const noexcept { return v_.dim(); }
  Vector const& v() const noexcept { return v_; }
  double epsilon() const noexcept { return epsilon_; }
  double lambda() const noexcept { return lambda_; }

 private:
  Vector v_;
  double epsilon_;
  double lambda_;
};

/// v_i = epsilon = 1/n^3. `epsilon` overrides the regularization only.
struct PaperSchedule {
  std::optional<double> epsilon;
};
/// v_i = value for all i.
struct ConstantSchedule {
  double value = 1.0;
  std::optional<double> epsilon;
};
/// v drawn uniformly from [-1, 1)^n and normalized to unit length.
struct RandomUnitSchedule {
  std::uint64_t seed = 0;
  std::optional<double> epsilon;
};
/// v_i = +/- scale with independent fair signs.
struct RademacherSchedule {
  std::uint64_t seed = 0;
  double scale = 1.0;
  std::optional<double> epsilon;
};
struct ExplicitSchedule {
  Vector v;
  double epsilon = 1.0;
};

using ProbeSchedule = std::variant<PaperSchedule, ConstantSchedule, RandomUnitSchedule,
                                   RademacherSchedule, ExplicitSchedule>;

/// Schedules other than explicit default epsilon to 1/n^3 when unset.
ProbeVector build_probe(std::size_t n, ProbeSchedule const& schedule);

/// The operator VᵀV + εI on R^(n²), held implicitly through the probe.
/// Block j (entries jn .. jn+n-1) maps x_j to v (v·x_j) + ε x_j.
class ImplicitGram {
 public:
  explicit ImplicitGram(ProbeVector probe) : probe_(std::move(probe)) {}

  ProbeVector const& probe() const noexcept { return probe_; }
  std::size_t dim() const noexcept { return probe_.n() * probe_.n(); }

  /// out = Â x in O(n²). `x` and `out` must not alias.
  void apply(std::span<double const> x, std::span<double> out) const;

  LinearOperator as_operator() const;

 private:
  ProbeVector probe_;
};

/// The probe constraint Cv = u and the normal-equation right-hand side y = Vᵀu.
struct ProbeSystem {
  ProbeVector probe;
  Vector u;  // dim n
  Vector y;  // dim n², block j equals u[j] v
};

/// u = A (B v) by two matrix-vector products; AB is never formed.
ProbeSystem compute_rhs(DenseMatrix const& a, DenseMatrix const& b, ProbeVector const& probe);

Vector gram_matvec(ImplicitGram const& op, Vector const& x);

inline constexpr std::size_t kDenseGramMaxN = 64;

/// Explicit n² x n² block-diagonal matrix with v vᵀ + εI on each block.
/// Test oracle only; refuses n > kDenseGramMaxN.
DenseMatrix dense_gram(ImplicitGram const& op);

/// 1 + λ/ε. Equals λmax(Â)/λmin(Â) exactly for n >= 2; for n = 1 the
/// operator is the scalar λ + ε.
double condition_bound(ProbeVector const& probe) noexcept;

}  // namespace amm
