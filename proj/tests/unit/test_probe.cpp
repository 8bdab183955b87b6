#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "amm/error.hpp"
#include "amm/norms.hpp"
#include "amm/probe.hpp"
#include "amm/solver.hpp"
#include "support/oracles.hpp"

using namespace amm;
using doctest::Approx;

TEST_CASE("build_probe schedules") {
  ProbeVector const p2 = build_probe(2, PaperSchedule{});
  CHECK(p2.v() == Vector{0.125, 0.125});
  CHECK(p2.epsilon() == 0.125);
  CHECK(p2.lambda() == 1.0 / 32.0);

  ProbeVector const e = build_probe(2, ExplicitSchedule{Vector{3, 4}, 1.0});
  CHECK(e.lambda() == 25.0);

  ProbeVector const p1 = build_probe(1, PaperSchedule{});
  CHECK(p1.v() == Vector{1.0});
  CHECK(p1.epsilon() == 1.0);
  CHECK(p1.lambda() == 1.0);

  CHECK(build_probe(3, PaperSchedule{0.5}).epsilon() == 0.5);
  CHECK(build_probe(3, ConstantSchedule{2.0, std::nullopt}).lambda() == 12.0);
  CHECK(build_probe(3, ConstantSchedule{2.0, std::nullopt}).epsilon() == Approx(1.0 / 27));

  ProbeVector const unit = build_probe(9, RandomUnitSchedule{4, 0.1});
  CHECK(unit.lambda() == Approx(1.0).epsilon(1e-14));
  CHECK(unit.v() == build_probe(9, RandomUnitSchedule{4, 0.1}).v());

  ProbeVector const rad = build_probe(16, RademacherSchedule{4, 0.5, 1.0});
  CHECK(rad.lambda() == 16 * 0.25);
  for (double x : rad.v().values()) CHECK(std::abs(x) == 0.5);
}

TEST_CASE("build_probe rejects degenerate probes") {
  CHECK_THROWS_AS(build_probe(2, ExplicitSchedule{Vector{0, 0}, 1.0}), InputError);
  CHECK_THROWS_AS(build_probe(2, ExplicitSchedule{Vector{1, 0}, 0.0}), InputError);
  CHECK_THROWS_AS(build_probe(2, ExplicitSchedule{Vector{1, 0}, -1.0}), InputError);
  CHECK_THROWS_AS(build_probe(3, ExplicitSchedule{Vector{1, 0}, 1.0}), InputError);
  CHECK_THROWS_AS(build_probe(0, PaperSchedule{}), InputError);
  CHECK_THROWS_AS(build_probe(2, ConstantSchedule{0.0, 1.0}), InputError);
}

TEST_CASE("lambda is the recomputable sum of squares") {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Vector const v = testing::random_probe_vector(1 + rng.below(20), rng);
    ProbeVector const p(v, 0.3);
    double const oracle = testing::to_eigen(v).squaredNorm();
    CHECK(p.lambda() == Approx(oracle).epsilon(1e-15));
  }
}

TEST_CASE("compute_rhs") {
  auto const id = DenseMatrix::identity(2);
  ProbeSystem const s1 = compute_rhs(id, id, ProbeVector(Vector{1, 1}, 1.0));
  CHECK(s1.u == Vector{1, 1});
  CHECK(s1.y == Vector{1, 1, 1, 1});

  ProbeSystem const s2 = compute_rhs(DenseMatrix{{1, 2}, {3, 4}}, id, ProbeVector(Vector{1, 0}, 1.0));
  CHECK(s2.u == Vector{1, 3});
  CHECK(s2.y == Vector{1, 0, 3, 0});

  ProbeSystem const s3 = compute_rhs(id, id, build_probe(2, PaperSchedule{}));
  CHECK(s3.u == Vector{0.125, 0.125});

  CHECK_THROWS_AS(compute_rhs(DenseMatrix::identity(3), id, ProbeVector(Vector{1, 1}, 1.0)),
                  InputError);
}

TEST_CASE("compute_rhs matches the exact product against the probe") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t const n = 1 + rng.below(12);
    DenseMatrix const a = testing::random_matrix(n, n, rng);
    DenseMatrix const b = testing::random_matrix(n, n, rng);
    ProbeVector const p(testing::random_probe_vector(n, rng), 0.5);
    ProbeSystem const s = compute_rhs(a, b, p);
    Eigen::VectorXd const u = testing::to_eigen(a) * testing::to_eigen(b) * testing::to_eigen(p.v());
    CHECK(testing::distance2(u, s.u) <= 1e-12 * (1 + u.norm()));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) CHECK(s.y[j * n + k] == s.u[j] * p.v()[k]);
  }
}

TEST_CASE("gram_matvec examples") {
  ImplicitGram const g1(ProbeVector(Vector{1, 2}, 0.5));
  Vector const r1 = gram_matvec(g1, Vector{1, 0, 0, 0});
  CHECK(r1 == Vector{1.5, 2, 0, 0});
  CHECK(testing::distance2(testing::gram_oracle(Vector{1, 2}, 0.5) * testing::to_eigen(Vector{1, 0, 0, 0}), r1) == 0.0);

  CHECK(gram_matvec(g1, Vector(4)) == Vector(4));

  ImplicitGram const g2(ProbeVector(Vector{1, 1}, 1.0));
  Vector const r2 = gram_matvec(g2, Vector{1, -1, 0, 0});
  CHECK(r2 == Vector{1, -1, 0, 0});
  CHECK(testing::distance2(testing::gram_oracle(Vector{1, 1}, 1.0) * testing::to_eigen(Vector{1, -1, 0, 0}), r2) == 0.0);

  CHECK_THROWS_AS(gram_matvec(g1, Vector(3)), InputError);
}

TEST_CASE("dense_gram examples") {
  CHECK(dense_gram(ImplicitGram(ProbeVector(Vector{2}, 1.0))) == DenseMatrix{{5}});
  CHECK(dense_gram(ImplicitGram(ProbeVector(Vector{1, 0}, 1.0))) ==
        DenseMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 1}});
  CHECK(dense_gram(ImplicitGram(ProbeVector(Vector{1, 2}, 0.5))) ==
        testing::from_eigen(testing::gram_oracle(Vector{1, 2}, 0.5)));
  CHECK(dense_gram(ImplicitGram(ProbeVector(Vector{1, 2}, 0.5))) ==
        DenseMatrix{{1.5, 2, 0, 0}, {2, 4.5, 0, 0}, {0, 0, 1.5, 2}, {0, 0, 2, 4.5}});

  CHECK_NOTHROW(dense_gram(ImplicitGram(build_probe(kDenseGramMaxN, PaperSchedule{}))));
  CHECK_THROWS_WITH_AS(dense_gram(ImplicitGram(build_probe(kDenseGramMaxN + 1, PaperSchedule{}))),
                       doctest::Contains("kDenseGramMaxN"), InputError);
}

TEST_CASE("condition_bound") {
  // n = 1 has the single eigenvalue λ + ε; the bound is attained only for n >= 2.
  CHECK(condition_bound(ProbeVector(Vector{1, 1}, 1.0)) == 3.0);
  CHECK(condition_bound(build_probe(2, PaperSchedule{})) == 1.25);
  CHECK(condition_bound(ProbeVector(Vector{1}, 1.0)) == 2.0);
}

TEST_CASE("implicit operator equals the dense oracle") {
  Rng rng(99);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      Vector const v = testing::random_probe_vector(n, rng);
      double const eps = 0.01 + 2.0 * rng.uniform01();
      Vector const x = testing::random_vector(n * n, rng);
      ImplicitGram const g(ProbeVector(v, eps));
      Eigen::VectorXd const expected = testing::gram_oracle(v, eps) * testing::to_eigen(x);
      CHECK(testing::distance2(expected, gram_matvec(g, x)) <= 1e-12 * expected.norm());
    }
  }
}

TEST_CASE("operator is symmetric and positive definite") {
  Rng rng(1234);
  for (int probe_trial = 0; probe_trial < 10; ++probe_trial) {
    std::size_t const n = 1 + rng.below(12);
    double const eps = std::ldexp(1.0, -int(rng.below(20)));
    ImplicitGram const g(ProbeVector(testing::random_probe_vector(n, rng), eps));
    for (int trial = 0; trial < 200; ++trial) {
      Vector const x = testing::random_vector(n * n, rng);
      Vector const z = testing::random_vector(n * n, rng);
      Vector const gx = gram_matvec(g, x);
      Vector const gz = gram_matvec(g, z);
      double const xgz = dot(x.values(), gz.values());
      double const zgx = dot(z.values(), gx.values());
      CHECK(std::abs(xgz - zgx) <= 1e-10 * std::max(1.0, std::abs(xgz)));
      double const xx = dot(x.values(), x.values());
      CHECK(dot(x.values(), gx.values()) >= eps * xx * (1 - 1e-12));
    }
  }
}

TEST_CASE("eigenvalues of the probe blocks") {
  Rng rng(55);
  PowerIterationOptions opts;
  opts.tol = 1e-15;
  opts.max_iters = 100000;
  for (int trial = 0; trial < 20; ++trial) {
    // n >= 2 so that Â also has the eigenvalue ε.
    std::size_t const n = 2 + rng.below(11);
    Vector const v = testing::random_probe_vector(n, rng);
    double const eps = 0.05 + rng.uniform01();
    ProbeVector const p(v, eps);

    DenseMatrix outer(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) outer(i, j) = v[i] * v[j];
    CHECK(spectral_radius_symmetric(outer, opts).value == Approx(p.lambda()).epsilon(1e-10));

    DenseMatrix block = outer;
    for (std::size_t i = 0; i < n; ++i) block(i, i) += eps;
    CHECK(spectral_radius_symmetric(block, opts).value ==
          Approx(p.lambda() + eps).epsilon(1e-10));

    // Measured condition number of the full operator equals the bound.
    Eigen::VectorXd const ev = testing::symmetric_eigenvalues(dense_gram(ImplicitGram(p)));
    CHECK(ev.maxCoeff() / ev.minCoeff() == Approx(condition_bound(p)).epsilon(1e-10));
  }
}

TEST_CASE("gram_matvec cost grows quadratically") {
  using Clock = std::chrono::steady_clock;
  auto const time_per_call = [](std::size_t n) {
    ImplicitGram const g(build_probe(n, PaperSchedule{}));
    Rng rng(n);
    Vector const x = testing::random_vector(n * n, rng);
    Vector out(n * n);
    double best = 1e300;
    for (int rep = 0; rep < 5; ++rep) {
      auto const t0 = Clock::now();
      for (int k = 0; k < 100; ++k) g.apply(x.values(), out.values());
      best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count() / 100);
    }
    return best;
  };
  double const small = time_per_call(128);
  double const large = time_per_call(256);
  CHECK(large <= 5.0 * small);
}
