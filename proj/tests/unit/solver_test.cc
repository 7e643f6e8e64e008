#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "distvar/scene.h"
#include "distvar/solver.h"
#include "oracles.h"

namespace distvar {
namespace {

std::complex<double> eval_gamma(const GammaPolynomial<RealField>& p, const std::array<std::complex<double>, 4>& g) {
  std::complex<double> s = 0;
  const auto& mons = gamma_ring::monomials();
  for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
    std::complex<double> v = p[i];
    for (int k = 0; k < 4; ++k) v *= std::pow(g[static_cast<std::size_t>(k)], static_cast<int>(mons[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]));
    s += v;
  }
  return s;
}

Trial trial(std::uint64_t index) { return generate_trial(SceneConfig{}, index); }

// Candidate whose lambda and f^2 are closest to the truth, among real f.
const SolutionCandidate* closest(const std::vector<SolutionCandidate>& sols, double lambda, double f2) {
  const SolutionCandidate* best = nullptr;
  double err = std::numeric_limits<double>::infinity();
  for (const auto& s : sols) {
    if (!s.f_real) continue;
    const double e = std::abs(s.lambda - lambda) / std::max(1.0, std::abs(lambda)) + std::abs(s.f_squared - f2) / f2;
    if (e < err) {
      err = e;
      best = &s;
    }
  }
  return best;
}

TEST(Coefficients, EpipolarRow) {
  const Correspondence p{{1, 2}, {3, 4}};
  const CoefficientVector expected{3, 6, 3, 15, 4, 8, 4, 20, 1, 2, 1, 5};
  EXPECT_EQ(epipolar_coefficients(p), expected);
}

TEST(Coefficients, TruthIsInTheKernel) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const auto t = trial(i);
    Eigen::Matrix<double, 12, 1> m;
    for (int k = 0; k < 12; ++k) m(k) = t.truth.m[static_cast<std::size_t>(k)];
    const auto c = coefficient_matrix(t.corrs);
    EXPECT_LT((c * m).norm(), 1e-10 * c.norm() * m.norm()) << i;
  }
}

TEST(Nullspace, OrthonormalKernelWithPositivePivot) {
  const auto t = trial(4);
  const auto c = coefficient_matrix(t.corrs);
  const auto nb = nullspace_basis(c);
  EXPECT_LT((c * nb.vectors).norm(), 1e-12 * c.norm());
  EXPECT_LT((nb.vectors.transpose() * nb.vectors - Eigen::Matrix<double, 5, 5>::Identity()).norm(), 1e-12);
  EXPECT_GT(nb.vectors(10, 4), 0);
  for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(nb.vectors(10, k)), nb.vectors(10, 4));
  // The kernel is a subspace: V V^T is the projector regardless of basis.
  const auto again = nullspace_basis(c);
  EXPECT_LT((nb.vectors * nb.vectors.transpose() - again.vectors * again.vectors.transpose()).norm(), 1e-12);
}

TEST(Nullspace, DuplicateCorrespondencesRaise) {
  const auto t = trial(0);
  std::array<Correspondence, 7> corrs;
  corrs.fill(t.corrs[0]);
  EXPECT_THROW(nullspace_basis(coefficient_matrix(corrs)), DegenerateDataError);
  EXPECT_THROW(default_solver().solve(corrs), DegenerateDataError);
}

TEST(Generators, DegreesAndDeterminant) {
  const auto nb = nullspace_basis(coefficient_matrix(trial(1).corrs));
  const auto gens = generator_polynomials(nb);
  const auto entries = affine_entries(nb);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(gens[static_cast<std::size_t>(k)].to_polynomial().total_degree(), kGeneratorDegrees[static_cast<std::size_t>(k)]);
  }
  for (int s = 0; s < 5; ++s) {
    const std::array<std::complex<double>, 4> g{n(rng), n(rng), n(rng), n(rng)};
    Eigen::Matrix3cd x;
    const int idx[9] = {0, 1, 2, 4, 5, 6, 8, 9, 10};
    for (int e = 0; e < 9; ++e) x(e / 3, e % 3) = eval_gamma(entries[static_cast<std::size_t>(idx[e])], g);
    EXPECT_LT(std::abs(eval_gamma(gens[4], g) + x.determinant()), 1e-10 * (1 + std::abs(x.determinant())));
  }
}

TEST(Solver, TwentyThreeCandidatesIncludingTheTruth) {
  int recovered = 0;
  for (std::uint64_t i = 0; i < 40; ++i) {
    const auto t = trial(i);
    const auto sols = default_solver().solve(t.corrs);
    ASSERT_EQ(sols.size(), 23u);
    for (const auto& s : sols) EXPECT_LE(s.residual, 1e-6) << i;
    const auto counts = count_real(sols);
    EXPECT_EQ(counts.n_real_variety % 2, 1) << "real roots come with odd parity";
    EXPECT_LE(counts.n_real_f, counts.n_real_variety);
    const auto* best = closest(sols, t.truth.lambda, t.truth.f * t.truth.f);
    if (best && std::abs(best->lambda - t.truth.lambda) < 1e-6 &&
        std::abs(best->f_squared - t.truth.f * t.truth.f) < 1e-6 * t.truth.f * t.truth.f) {
      ++recovered;
      // The recovered F matches the truth up to sign and scale.
      const Eigen::Matrix3d f = best->F.normalized();
      EXPECT_LT(std::min((f - t.truth.F).norm(), (f + t.truth.F).norm()), 1e-6);
    }
  }
  EXPECT_GE(recovered, 39);
}

TEST(Solver, SpectrumIsTheActionCoordinate) {
  const auto t = trial(7);
  SolverOptions opts;
  opts.refine_steps = 0;
  opts.chart_retries = 0;
  SolveDetails details;
  const auto sols = default_solver().solve(t.corrs, opts, &details);
  ASSERT_EQ(details.eigenvalues.size(), 23);
  std::vector<bool> used(23, false);
  for (const auto& s : sols) {
    int match = -1;
    double err = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 23; ++j) {
      const double e = std::abs(details.eigenvalues(j) - s.gamma[0]);
      if (!used[static_cast<std::size_t>(j)] && e < err) {
        err = e;
        match = j;
      }
    }
    ASSERT_GE(match, 0);
    used[static_cast<std::size_t>(match)] = true;
    EXPECT_LT(err, 1e-8 * (1 + std::abs(s.gamma[0])));
  }
}

TEST(Solver, EigenvectorsSatisfyTheGenerators) {
  const auto t = trial(9);
  const auto nb = nullspace_basis(coefficient_matrix(t.corrs));
  const auto gens = generator_polynomials(nb);
  SolverOptions opts;
  opts.refine_steps = 0;
  for (const auto& s : default_solver().solve(nb, opts)) {
    EXPECT_LE(generator_residual(gens, s.gamma), 1e-6);
    double scale = 0;
    for (const auto& c : gens[0].coefficients()) scale += std::abs(c);
    EXPECT_LT(std::abs(eval_gamma(gens[0], s.gamma)), 1e-4 * scale * std::pow(1 + std::abs(s.gamma[0]) + std::abs(s.gamma[1]) + std::abs(s.gamma[2]) + std::abs(s.gamma[3]), 2));
  }
}

TEST(Solver, SecondImageScaleMultipliesTheFocalLength) {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto t = trial(i);
    const double s = 3.0;
    auto scaled = t.corrs;
    for (auto& p : scaled) {
      for (auto& c : p.u2) c *= s;
    }
    const double f2 = t.truth.f * t.truth.f;
    const auto sa = default_solver().solve(t.corrs);
    const auto sb = default_solver().solve(scaled);
    const auto* a = closest(sa, t.truth.lambda, f2);
    const auto* b = closest(sb, t.truth.lambda, f2 * s * s);
    ASSERT_TRUE(a && b);
    EXPECT_NEAR(b->lambda, a->lambda, 1e-7 * (1 + std::abs(a->lambda)));
    EXPECT_NEAR(b->f_squared / (s * s), a->f_squared, 1e-7 * a->f_squared);
  }
}

TEST(Solver, RotatedChartRescuesIllConditionedInstances) {
  SceneConfig cfg;
  cfg.seed = 6;
  const auto t = generate_trial(cfg, 997);
  SolverOptions single;
  single.chart_retries = 0;
  double worst_single = 0;
  for (const auto& s : default_solver().solve(t.corrs, single)) worst_single = std::max(worst_single, s.residual);
  SolveDetails details;
  double worst = 0;
  for (const auto& s : default_solver().solve(t.corrs, {}, &details)) worst = std::max(worst, s.residual);
  EXPECT_GT(worst_single, 1e-6);
  EXPECT_GT(details.chart, 0);
  EXPECT_LE(worst, 1e-9);
}

TEST(Solver, Deterministic) {
  const auto t = trial(11);
  const auto a = default_solver().solve(t.corrs);
  const auto b = default_solver().solve(t.corrs);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].gamma, b[k].gamma);
    EXPECT_EQ(a[k].is_real, b[k].is_real);
  }
}

TEST(Solver, DoublePrecisionPathAgrees) {
  const auto t = trial(12);
  SolverOptions opts;
  opts.extended_precision = false;
  const auto sols = default_solver().solve(t.corrs, opts);
  const auto* best = closest(sols, t.truth.lambda, t.truth.f * t.truth.f);
  ASSERT_NE(best, nullptr);
  EXPECT_NEAR(best->lambda, t.truth.lambda, 1e-6);
}

}  // namespace
}  // namespace distvar
