#pragma once

#include <Eigen/Core>

namespace distvar {

// f^2 for X = diag(1/f, 1/f, 1) * E with E essential. The rational
// expression is invariant under X -> sX and X -> diag(-1,-1,1) X.
// Throws DegenerateDataError when the denominator is below
// tol * ||X||^3 (Frobenius).
double focal_squared(const Eigen::Matrix3d& x, double tol = 1e-12);

// Numerator and denominator of the expression above.
struct FocalRatio {
  double numerator = 0;
  double denominator = 0;
};
FocalRatio focal_ratio(const Eigen::Matrix3d& x);

}  // namespace distvar
