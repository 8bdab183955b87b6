#include "amm/probe.hpp"

#include <cmath>
#include <string>

#include "amm/error.hpp"
#include "amm/random.hpp"
#include "amm/solver.hpp"

namespace amm {

namespace {

double sum_of_squares(Vector const& v) {
  double s = 0.0;
  for (double x : v.values()) s += x * x;
  return s;
}

double paper_value(std::size_t n) {
  double const nd = static_cast<double>(n);
  return 1.0 / (nd * nd * nd);
}

}  // namespace

ProbeVector::ProbeVector(Vector v, double epsilon)
    : v_(std::move(v)), epsilon_(epsilon), lambda_(sum_of_squares(v_)) {
  if (v_.dim() == 0) throw InputError("probe: vector must have dimension >= 1");
  if (!(epsilon_ > 0.0) || !std::isfinite(epsilon_)) {
    throw InputError("probe: epsilon must be positive and finite");
  }
  if (!(lambda_ > 0.0)) throw InputError("probe: vector must be nonzero");
  if (!std::isfinite(lambda_)) throw InputError("probe: sum of squares overflows");
}

ProbeVector build_probe(std::size_t n, ProbeSchedule const& schedule) {
  if (n == 0) throw InputError("build_probe: n must be >= 1");
  auto const eps_or_default = [n](std::optional<double> eps) {
    return eps.value_or(paper_value(n));
  };

  struct Visitor {
    std::size_t n;
    decltype(eps_or_default) const& eps;

    ProbeVector operator()(PaperSchedule const& s) const {
      double const value = paper_value(n);
      return ProbeVector(Vector(std::vector<double>(n, value)), s.epsilon.value_or(value));
    }
    ProbeVector operator()(ConstantSchedule const& s) const {
      return ProbeVector(Vector(std::vector<double>(n, s.value)), eps(s.epsilon));
    }
    ProbeVector operator()(RandomUnitSchedule const& s) const {
      Rng rng(s.seed);
      std::vector<double> v(n);
      double norm = 0.0;
      do {
        for (double& x : v) x = rng.uniform_signed();
        norm = 0.0;
        for (double x : v) norm += x * x;
      } while (norm == 0.0);
      norm = std::sqrt(norm);
      for (double& x : v) x /= norm;
      return ProbeVector(Vector(std::move(v)), eps(s.epsilon));
    }
    ProbeVector operator()(RademacherSchedule const& s) const {
      Rng rng(s.seed);
      std::vector<double> v(n);
      for (double& x : v) x = (rng.next() >> 63) ? s.scale : -s.scale;
      return ProbeVector(Vector(std::move(v)), eps(s.epsilon));
    }
    ProbeVector operator()(ExplicitSchedule const& s) const {
      if (s.v.dim() != n) {
        throw InputError("build_probe: explicit vector has dimension " +
                         std::to_string(s.v.dim()) + ", expected " + std::to_string(n));
      }
      return ProbeVector(s.v, s.epsilon);
    }
  };
  return std::visit(Visitor{n, eps_or_default}, schedule);
}

void ImplicitGram::apply(std::span<double const> x, std::span<double> out) const {
  std::size_t const n = probe_.n();
  if (x.size() != n * n || out.size() != n * n) {
    throw InputError("gram_matvec: expected vectors of dimension " + std::to_string(n * n));
  }
  auto const v = probe_.v().values();
  double const eps = probe_.epsilon();
  for (std::size_t j = 0; j < n; ++j) {
    auto const xj = x.subspan(j * n, n);
    auto const oj = out.subspan(j * n, n);
    double const proj = dot(v, xj);
    for (std::size_t k = 0; k < n; ++k) oj[k] = v[k] * proj + eps * xj[k];
  }
}

LinearOperator ImplicitGram::as_operator() const {
  return LinearOperator(dim(), [self = *this](std::span<double const> x, std::span<double> out) {
    self.apply(x, out);
  });
}

ProbeSystem compute_rhs(DenseMatrix const& a, DenseMatrix const& b, ProbeVector const& probe) {
  std::size_t const n = probe.n();
  if (a.rows() != n || a.cols() != n || b.rows() != n || b.cols() != n) {
    throw InputError("compute_rhs: A and B must both be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  Vector u = matvec(a, matvec(b, probe.v()));
  Vector y(n * n);
  auto const v = probe.v().values();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) y[j * n + k] = u[j] * v[k];
  return ProbeSystem{probe, std::move(u), std::move(y)};
}

Vector gram_matvec(ImplicitGram const& op, Vector const& x) {
  if (x.dim() != op.dim()) {
    throw InputError("gram_matvec: vector has dimension " + std::to_string(x.dim()) +
                     ", operator has " + std::to_string(op.dim()));
  }
  Vector out(op.dim());
  op.apply(x.values(), out.values());
  return out;
}

DenseMatrix dense_gram(ImplicitGram const& op) {
  std::size_t const n = op.probe().n();
  if (n > kDenseGramMaxN) {
    throw InputError("dense_gram: n = " + std::to_string(n) + " exceeds kDenseGramMaxN = " +
                     std::to_string(kDenseGramMaxN));
  }
  auto const v = op.probe().v().values();
  double const eps = op.probe().epsilon();
  DenseMatrix g(n * n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t const base = j * n;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        g(base + r, base + c) = v[r] * v[c] + (r == c ? eps : 0.0);
  }
  return g;
}

double condition_bound(ProbeVector const& probe) noexcept {
  return 1.0 + probe.lambda() / probe.epsilon();
}

}  // namespace amm
