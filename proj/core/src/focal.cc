#include "distvar/focal.h"

#include <cmath>

#include "distvar/errors.h"

namespace distvar {

FocalRatio focal_ratio(const Eigen::Matrix3d& x) {
  const double x11 = x(0, 0), x12 = x(0, 1), x13 = x(0, 2);
  const double x21 = x(1, 0), x22 = x(1, 1), x23 = x(1, 2);
  const double x31 = x(2, 0), x32 = x(2, 1), x33 = x(2, 2);
  FocalRatio r;
  r.numerator = x23 * x31 * x31 + x23 * x32 * x32 - 2 * x21 * x31 * x33 - 2 * x22 * x32 * x33 - x23 * x33 * x33;
  r.denominator = 2 * x11 * x13 * x21 + 2 * x12 * x13 * x22 - x11 * x11 * x23 - x12 * x12 * x23 +
                  x13 * x13 * x23 + x21 * x21 * x23 + x22 * x22 * x23 + x23 * x23 * x23;
  return r;
}

double focal_squared(const Eigen::Matrix3d& x, double tol) {
  const FocalRatio r = focal_ratio(x);
  const double scale = std::pow(x.norm(), 3);
  if (!(std::abs(r.denominator) > tol * scale)) throw DegenerateDataError("focal formula denominator vanishes");
  return r.numerator / r.denominator;
}

}  // namespace distvar
