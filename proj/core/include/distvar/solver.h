#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "distvar/elimination_template.h"
#include "distvar/gamma_poly.h"

namespace distvar {

// U1 is the distorted camera with unit focal length, U2 the pinhole camera
// with focal length f.
struct Correspondence {
  std::array<double, 2> u1{};
  std::array<double, 2> u2{};
};

// [u2u1, u2v1, u2, u2r, v2u1, v2v1, v2, v2r, u1, v1, 1, r] with r = |U1|^2,
// paired with m = [x11,x12,x13,y13,x21,x22,x23,y23,x31,x32,x33,y33].
using CoefficientVector = std::array<double, 12>;
CoefficientVector epipolar_coefficients(const Correspondence& p);

using CoefficientMatrix = Eigen::Matrix<double, 7, 12>;
CoefficientMatrix coefficient_matrix(std::span<const Correspondence> corrs);

// Orthonormal kernel basis; column 4 is n5, the vector with the largest
// |entry 10|, made positive there.
struct NullBasis {
  Eigen::Matrix<double, 12, 5> vectors;
};
// Throws DegenerateDataError when sigma_7 / sigma_1 <= rank_tol.
NullBasis nullspace_basis(const CoefficientMatrix& c, double rank_tol = 1e-10);

// The twelve entries of m = gamma_1 n1 + ... + gamma_4 n4 + n5.
std::array<GammaPolynomial<RealField>, 12> affine_entries(const NullBasis& nb);
std::array<GammaPolynomial<RealField>, 10> generator_polynomials(const NullBasis& nb);

struct SolutionCandidate {
  std::array<std::complex<double>, 4> gamma{};
  // Populated when is_real.
  std::array<double, 12> m{};
  Eigen::Matrix3d F = Eigen::Matrix3d::Zero();
  double lambda = 0;
  double f_squared = 0;
  // max_j |f_j(gamma)| / sum_a |c_ja| |gamma^a|.
  double residual = 0;
  bool is_real = false;
  bool f_real = false;
};

struct SolverOptions {
  double real_tol = 1e-6;
  double rank_tol = 1e-10;
  // Gauss-Newton steps on f_1..f_10 applied to every eigenvector estimate;
  // a step is kept only if it lowers the residual.
  int refine_steps = 3;
  // Elimination and eigen-decomposition in long double.
  bool extended_precision = true;
  // When the worst refined residual exceeds retry_tol, the solve is repeated
  // in up to chart_retries rotated kernel bases; the best attempt is kept.
  double retry_tol = 1e-9;
  int chart_retries = 3;
};

// Intermediate quantities of the kept chart attempt.
struct SolveDetails {
  Eigen::MatrixXd action_matrix;
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  // 0 for the kernel basis as given, k for the k-th rotated basis.
  int chart = 0;
};

// Immutable after construction; solve() may be called concurrently.
class MinimalSolver {
 public:
  explicit MinimalSolver(EliminationTemplate tmpl);

  const EliminationTemplate& elimination_template() const { return tmpl_; }

  // Throws DegenerateDataError on rank failures and NumericError when the
  // eigensolver does not converge.
  std::vector<SolutionCandidate> solve(std::span<const Correspondence> corrs, const SolverOptions& options = {},
                                       SolveDetails* details = nullptr) const;
  std::vector<SolutionCandidate> solve(const NullBasis& nb, const SolverOptions& options = {},
                                       SolveDetails* details = nullptr) const;

 private:
  std::vector<std::array<std::complex<double>, 4>> chart_roots(const NullBasis& nb, bool extended_precision,
                                                               SolveDetails* details) const;

  struct Entry {
    int column;
    int coefficient;
  };
  EliminationTemplate tmpl_;
  // Per template row, the columns touched by generator coefficients.
  std::vector<std::vector<Entry>> fill_;
  // Per basis monomial b: row of the reduced block for gamma_a * b, or
  // -(basis position + 1) when the product lies in the basis.
  std::vector<int> action_rows_;
  std::array<int, 4> gamma_positions_{};
  int one_position_ = 0;
};

// The solver over the default template.
const MinimalSolver& default_solver();

struct RealCounts {
  int n_real_variety = 0;
  int n_real_f = 0;
};
RealCounts count_real(std::span<const SolutionCandidate> sols);

// Gauss-Newton polish of a gamma point on the generators.
std::array<std::complex<double>, 4> refine_gamma(const std::array<GammaPolynomial<RealField>, 10>& gens,
                                                 std::array<std::complex<double>, 4> gamma, int steps);

// Generator residual of a gamma point, normalized as in SolutionCandidate.
double generator_residual(const std::array<GammaPolynomial<RealField>, 10>& gens,
                          const std::array<std::complex<double>, 4>& gamma);

}  // namespace distvar
