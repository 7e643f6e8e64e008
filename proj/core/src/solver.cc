#include "distvar/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <tuple>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "distvar/errors.h"
#include "distvar/focal.h"

namespace distvar {

CoefficientVector epipolar_coefficients(const Correspondence& p) {
  const double u1 = p.u1[0], v1 = p.u1[1], u2 = p.u2[0], v2 = p.u2[1];
  const double r = u1 * u1 + v1 * v1;
  return {u2 * u1, u2 * v1, u2, u2 * r, v2 * u1, v2 * v1, v2, v2 * r, u1, v1, 1.0, r};
}

CoefficientMatrix coefficient_matrix(std::span<const Correspondence> corrs) {
  if (corrs.size() != 7) throw DimensionError("the solver needs exactly 7 correspondences");
  CoefficientMatrix c;
  for (int i = 0; i < 7; ++i) {
    const auto& p = corrs[static_cast<std::size_t>(i)];
    for (double x : {p.u1[0], p.u1[1], p.u2[0], p.u2[1]}) {
      if (!std::isfinite(x)) throw RangeError("correspondence coordinates must be finite");
    }
    const auto v = epipolar_coefficients(p);
    for (int k = 0; k < 12; ++k) c(i, k) = v[static_cast<std::size_t>(k)];
  }
  return c;
}

NullBasis nullspace_basis(const CoefficientMatrix& c, double rank_tol) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(c), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  if (!(s(6) > rank_tol * s(0))) throw DegenerateDataError("correspondence matrix is rank deficient");
  NullBasis nb;
  nb.vectors = svd.matrixV().rightCols(5);
  int pivot = 0;
  for (int k = 1; k < 5; ++k) {
    if (std::abs(nb.vectors(10, k)) > std::abs(nb.vectors(10, pivot))) pivot = k;
  }
  nb.vectors.col(pivot).swap(nb.vectors.col(4));
  if (nb.vectors(10, 4) < 0) nb.vectors.col(4) = -nb.vectors.col(4);
  return nb;
}

std::array<GammaPolynomial<RealField>, 12> affine_entries(const NullBasis& nb) {
  const RealField rf;
  std::array<GammaPolynomial<RealField>, 12> m;
  for (int k = 0; k < 12; ++k) {
    const auto& v = nb.vectors;
    m[static_cast<std::size_t>(k)] =
        GammaPolynomial<RealField>::affine(rf, {v(k, 0), v(k, 1), v(k, 2), v(k, 3), v(k, 4)});
  }
  return m;
}

std::array<GammaPolynomial<RealField>, 10> generator_polynomials(const NullBasis& nb) {
  return gamma_generators(affine_entries(nb));
}

namespace {

std::array<std::complex<double>, gamma_ring::kNumMonomials> monomial_values(
    const std::array<std::complex<double>, 4>& gamma) {
  std::array<std::array<std::complex<double>, gamma_ring::kMaxDegree + 1>, 4> pow;
  for (std::size_t v = 0; v < 4; ++v) {
    pow[v][0] = 1.0;
    for (std::size_t k = 1; k <= gamma_ring::kMaxDegree; ++k) pow[v][k] = pow[v][k - 1] * gamma[v];
  }
  std::array<std::complex<double>, gamma_ring::kNumMonomials> out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& e = gamma_ring::monomials()[i];
    out[i] = pow[0][e[0]] * pow[1][e[1]] * pow[2][e[2]] * pow[3][e[3]];
  }
  return out;
}

bool before(const SolutionCandidate& a, const SolutionCandidate& b) {
  auto key = [](const SolutionCandidate& s) {
    return std::make_tuple(!s.is_real, s.gamma[0].real(), s.gamma[0].imag(), s.gamma[1].real(), s.gamma[1].imag(),
                           s.gamma[2].real(), s.gamma[2].imag(), s.gamma[3].real(), s.gamma[3].imag());
  };
  return key(a) < key(b);
}

}  // namespace

double generator_residual(const std::array<GammaPolynomial<RealField>, 10>& gens,
                          const std::array<std::complex<double>, 4>& gamma) {
  const auto values = monomial_values(gamma);
  double worst = 0;
  for (const auto& g : gens) {
    std::complex<double> sum = 0;
    double scale = 0;
    for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
      const double c = g[i];
      if (c == 0) continue;
      sum += c * values[static_cast<std::size_t>(i)];
      scale += std::abs(c) * std::abs(values[static_cast<std::size_t>(i)]);
    }
    if (scale > 0) worst = std::max(worst, std::abs(sum) / scale);
  }
  return std::isfinite(worst) ? worst : std::numeric_limits<double>::infinity();
}

std::array<std::complex<double>, 4> refine_gamma(const std::array<GammaPolynomial<RealField>, 10>& gens,
                                                 std::array<std::complex<double>, 4> gamma, int steps) {
  static const auto lowered = [] {
    // lowered[i][v] = index of gamma^(a - e_v), or -1.
    std::array<std::array<int, 4>, gamma_ring::kNumMonomials> out{};
    for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
      for (std::size_t v = 0; v < 4; ++v) {
        auto e = gamma_ring::monomials()[static_cast<std::size_t>(i)];
        out[static_cast<std::size_t>(i)][v] = e[v] == 0 ? -1 : (--e[v], gamma_ring::index_of(e));
      }
    }
    return out;
  }();
  double current = generator_residual(gens, gamma);
  for (int step = 0; step < steps && current > 0; ++step) {
    const auto values = monomial_values(gamma);
    Eigen::Matrix<std::complex<double>, 10, 4> jac = Eigen::Matrix<std::complex<double>, 10, 4>::Zero();
    Eigen::Matrix<std::complex<double>, 10, 1> val = Eigen::Matrix<std::complex<double>, 10, 1>::Zero();
    for (int j = 0; j < 10; ++j) {
      const auto& g = gens[static_cast<std::size_t>(j)];
      for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
        const double c = g[i];
        if (c == 0) continue;
        const auto& e = gamma_ring::monomials()[static_cast<std::size_t>(i)];
        val(j) += c * values[static_cast<std::size_t>(i)];
        for (std::size_t v = 0; v < 4; ++v) {
          const int low = lowered[static_cast<std::size_t>(i)][v];
          if (low >= 0) jac(j, static_cast<int>(v)) += c * static_cast<double>(e[v]) * values[static_cast<std::size_t>(low)];
        }
      }
    }
    const Eigen::Matrix<std::complex<double>, 4, 1> delta = jac.colPivHouseholderQr().solve(val);
    std::array<std::complex<double>, 4> next = gamma;
    for (std::size_t v = 0; v < 4; ++v) next[v] -= delta(static_cast<int>(v));
    const double r = generator_residual(gens, next);
    if (!(r < current)) break;
    gamma = next;
    current = r;
  }
  return gamma;
}

MinimalSolver::MinimalSolver(EliminationTemplate tmpl) : tmpl_(std::move(tmpl)) {
  if (tmpl_.columns.size() != EliminationTemplate::kNumColumns) throw DimensionError("template must have 126 columns");
  const auto& basis = standard_basis();
  if (!std::equal(basis.begin(), basis.end(), tmpl_.columns.begin() + EliminationTemplate::kNumReducible)) {
    throw ConstructionError("template basis differs from the standard monomial basis");
  }
  if (tmpl_.action_variable < 0 || tmpl_.action_variable >= gamma_ring::kVars) {
    throw RangeError("action variable must be one of gamma_1..gamma_4");
  }
  std::array<int, gamma_ring::kNumMonomials> position{};
  for (std::size_t c = 0; c < tmpl_.columns.size(); ++c) {
    position[static_cast<std::size_t>(tmpl_.columns[c])] = static_cast<int>(c);
  }
  for (const auto& r : tmpl_.rows) {
    std::vector<Entry> entries;
    const int max_degree = kGeneratorDegrees[static_cast<std::size_t>(r.generator)];
    for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
      if (gamma_ring::degree(i) > max_degree) continue;
      const int target = gamma_ring::product(i, r.multiplier);
      if (target < 0) throw ConstructionError("template row exceeds degree 5");
      entries.push_back({position[static_cast<std::size_t>(target)], i});
    }
    fill_.push_back(std::move(entries));
  }
  gamma_ring::Exponents e{};
  e[static_cast<std::size_t>(tmpl_.action_variable)] = 1;
  const int action = gamma_ring::index_of(e);
  for (int b : basis) {
    const int pos = position[static_cast<std::size_t>(gamma_ring::product(action, b))];
    action_rows_.push_back(pos >= EliminationTemplate::kNumReducible ? -(pos - EliminationTemplate::kNumReducible + 1)
                                                                      : pos);
  }
  for (int v = 0; v < 4; ++v) {
    gamma_ring::Exponents g{};
    g[static_cast<std::size_t>(v)] = 1;
    const int idx = gamma_ring::index_of(g);
    gamma_positions_[static_cast<std::size_t>(v)] = static_cast<int>(std::find(basis.begin(), basis.end(), idx) - basis.begin());
  }
  one_position_ = static_cast<int>(std::find(basis.begin(), basis.end(), gamma_ring::index_of({0, 0, 0, 0})) - basis.begin());
}

std::vector<SolutionCandidate> MinimalSolver::solve(std::span<const Correspondence> corrs,
                                                    const SolverOptions& options, SolveDetails* details) const {
  return solve(nullspace_basis(coefficient_matrix(corrs), options.rank_tol), options, details);
}

namespace {

template <class Scalar>
using ScalarMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

struct Eigenpairs {
  Eigen::MatrixXd action_matrix;
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
};

// Eliminates the non-basis columns of the filled template and returns the
// eigen-decomposition of the action matrix.
template <class Scalar>
Eigenpairs action_eigenpairs(const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>& filled,
                             const std::vector<int>& action_rows) {
  constexpr int kCols = EliminationTemplate::kNumColumns;
  constexpr int kRed = EliminationTemplate::kNumReducible;
  constexpr int kBasis = EliminationTemplate::kBasisSize;
  using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const int rows = static_cast<int>(filled.rows());
  RowMatrix a = filled.template cast<Scalar>();
  // Forward elimination with partial pivoting on the non-basis columns.
  const Scalar scale = a.cwiseAbs().maxCoeff();
  for (int k = 0; k < kRed; ++k) {
    int p = k;
    a.col(k).segment(k, rows - k).cwiseAbs().maxCoeff(&p);
    p += k;
    if (!(std::abs(a(p, k)) > Scalar(1e-14) * scale)) {
      throw DegenerateDataError("elimination template matrix is rank deficient");
    }
    if (p != k) a.row(p).swap(a.row(k));
    const Scalar inv = Scalar(1) / a(k, k);
    for (int r = k + 1; r < rows; ++r) {
      const Scalar f = a(r, k) * inv;
      if (f == Scalar(0)) continue;
      a.row(r).segment(k, kCols - k) -= f * a.row(k).segment(k, kCols - k);
    }
  }
  const ScalarMatrix<Scalar> reduced =
      a.topLeftCorner(kRed, kRed).template triangularView<Eigen::Upper>().solve(a.block(0, kRed, kRed, kBasis));
  ScalarMatrix<Scalar> m1 = ScalarMatrix<Scalar>::Zero(kBasis, kBasis);
  for (int k = 0; k < kBasis; ++k) {
    const int src = action_rows[static_cast<std::size_t>(k)];
    if (src < 0) {
      m1(k, -src - 1) = Scalar(1);
    } else {
      m1.row(k) = -reduced.row(src);
    }
  }
  const Eigen::EigenSolver<ScalarMatrix<Scalar>> es(m1, true);
  if (es.info() != Eigen::Success) throw NumericError("eigen decomposition of the action matrix did not converge");
  return {m1.template cast<double>(), es.eigenvalues().template cast<std::complex<double>>(),
          es.eigenvectors().template cast<std::complex<double>>()};
}

}  // namespace

std::vector<std::array<std::complex<double>, 4>> MinimalSolver::chart_roots(const NullBasis& nb, bool extended_precision,
                                                                           SolveDetails* details) const {
  constexpr int kCols = EliminationTemplate::kNumColumns;
  constexpr int kRed = EliminationTemplate::kNumReducible;
  constexpr int kBasis = EliminationTemplate::kBasisSize;
  const auto gens = generator_polynomials(nb);

  const int rows = static_cast<int>(tmpl_.rows.size());
  if (rows < kRed) throw DegenerateDataError("elimination template has fewer than 103 rows");
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> a =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Zero(rows, kCols);
  for (int r = 0; r < rows; ++r) {
    const auto& g = gens[static_cast<std::size_t>(tmpl_.rows[static_cast<std::size_t>(r)].generator)];
    for (const auto& e : fill_[static_cast<std::size_t>(r)]) a(r, e.column) = g[e.coefficient];
  }
  const Eigenpairs eig = extended_precision ? action_eigenpairs<long double>(a, action_rows_)
                                            : action_eigenpairs<double>(a, action_rows_);
  std::vector<std::array<std::complex<double>, 4>> roots(kBasis);
  for (int j = 0; j < kBasis; ++j) {
    const std::complex<double> one = eig.vectors(one_position_, j);
    for (std::size_t v = 0; v < 4; ++v) roots[static_cast<std::size_t>(j)][v] = eig.vectors(gamma_positions_[v], j) / one;
  }
  if (details) {
    details->action_matrix = eig.action_matrix;
    details->eigenvalues = eig.values;
    details->eigenvectors = eig.vectors;
  }
  return roots;
}

namespace {

// Fixed orthogonal change of kernel basis for chart attempt k >= 1.
Eigen::Matrix<double, 5, 5> chart_rotation(int k) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(k));
  std::normal_distribution<double> normal;
  Eigen::Matrix<double, 5, 5> g;
  for (int i = 0; i < 25; ++i) g(i / 5, i % 5) = normal(rng);
  return Eigen::HouseholderQR<Eigen::Matrix<double, 5, 5>>(g).householderQ();
}

}  // namespace

std::vector<SolutionCandidate> MinimalSolver::solve(const NullBasis& nb, const SolverOptions& options,
                                                    SolveDetails* details) const {
  const auto gens = generator_polynomials(nb);
  // Roots in the chart of nb, refined on the original generators.
  auto attempt = [&](int k, SolveDetails* d) {
    std::vector<std::array<std::complex<double>, 4>> roots;
    if (k == 0) {
      roots = chart_roots(nb, options.extended_precision, d);
    } else {
      const Eigen::Matrix<double, 5, 5> q = chart_rotation(k);
      NullBasis rotated;
      rotated.vectors = nb.vectors * q;
      roots = chart_roots(rotated, options.extended_precision, d);
      for (auto& g : roots) {
        Eigen::Matrix<std::complex<double>, 5, 1> y;
        y << g[0], g[1], g[2], g[3], 1.0;
        const Eigen::Matrix<std::complex<double>, 5, 1> x = q.cast<std::complex<double>>() * y;
        for (std::size_t v = 0; v < 4; ++v) g[v] = x(static_cast<int>(v)) / x(4);
      }
    }
    double worst = 0;
    for (auto& g : roots) {
      if (options.refine_steps > 0) g = refine_gamma(gens, g, options.refine_steps);
      worst = std::max(worst, generator_residual(gens, g));
    }
    return std::make_pair(roots, worst);
  };
  auto best = attempt(0, details);
  for (int k = 1; k <= options.chart_retries && !(best.second <= options.retry_tol); ++k) {
    SolveDetails d;
    auto next = attempt(k, details ? &d : nullptr);
    if (next.second < best.second) {
      best = std::move(next);
      if (details) {
        *details = std::move(d);
        details->chart = k;
      }
    }
  }

  std::vector<SolutionCandidate> out;
  out.reserve(best.first.size());
  for (const auto& gamma : best.first) {
    SolutionCandidate s;
    s.gamma = gamma;
    s.residual = generator_residual(gens, s.gamma);
    s.is_real = std::all_of(s.gamma.begin(), s.gamma.end(), [&](const std::complex<double>& g) {
      return std::abs(g.imag()) <= options.real_tol * (1.0 + std::abs(g.real()));
    });
    if (s.is_real) {
      Eigen::Matrix<double, 5, 1> coords;
      coords << s.gamma[0].real(), s.gamma[1].real(), s.gamma[2].real(), s.gamma[3].real(), 1.0;
      const Eigen::Matrix<double, 12, 1> m = nb.vectors * coords;
      for (int k = 0; k < 12; ++k) s.m[static_cast<std::size_t>(k)] = m(k);
      s.F << m(0), m(1), m(2), m(4), m(5), m(6), m(8), m(9), m(10);
      s.lambda = (m(2) * m(3) + m(6) * m(7) + m(10) * m(11)) / (m(2) * m(2) + m(6) * m(6) + m(10) * m(10));
      try {
        s.f_squared = focal_squared(s.F);
        s.f_real = s.f_squared > 0;
      } catch (const DegenerateDataError&) {
        s.f_squared = std::numeric_limits<double>::quiet_NaN();
      }
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end(), before);
  return out;
}

const MinimalSolver& default_solver() {
  static const MinimalSolver solver(build_template());
  return solver;
}

RealCounts count_real(std::span<const SolutionCandidate> sols) {
  RealCounts c;
  for (const auto& s : sols) {
    if (!s.is_real) continue;
    ++c.n_real_variety;
    if (s.f_real) ++c.n_real_f;
  }
  return c;
}

}  // namespace distvar
