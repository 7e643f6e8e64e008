#include <gtest/gtest.h>

#include <random>

#include "distvar/errors.h"
#include "distvar/focal.h"
#include "oracles.h"

namespace distvar {
namespace {

Eigen::Matrix3d with_focal(const Eigen::Matrix3d& e, double f) {
  return Eigen::Vector3d(1 / f, 1 / f, 1).asDiagonal() * e;
}

TEST(Focal, RecoversTheFocalLengthOfRandomPairs) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> fd(0.3, 5.0);
  for (int k = 0; k < 500; ++k) {
    const double f = fd(rng);
    const Eigen::Matrix3d x = with_focal(oracle::random_essential(rng), f);
    const double got = focal_squared(x);
    EXPECT_NEAR(got, f * f, 1e-9 * f * f) << k;
    EXPECT_NEAR(got, oracle::focal_squared_reference(x), 1e-7 * f * f) << k;
  }
}

TEST(Focal, InvariantUnderScaleAndSignFlip) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> fd(0.3, 5.0);
  std::uniform_real_distribution<double> sd(-10.0, 10.0);
  const Eigen::Matrix3d flip = Eigen::Vector3d(-1, -1, 1).asDiagonal();
  for (int k = 0; k < 200; ++k) {
    const Eigen::Matrix3d x = with_focal(oracle::random_essential(rng), fd(rng));
    const double base = focal_squared(x);
    double s = sd(rng);
    if (std::abs(s) < 0.1) s = 0.5;
    EXPECT_NEAR(focal_squared(s * x), base, 1e-10 * base);
    EXPECT_NEAR(focal_squared(flip * x), base, 1e-10 * base);
  }
}

TEST(Focal, RatioIsHomogeneousOfDegreeThree) {
  std::mt19937_64 rng(5);
  const Eigen::Matrix3d x = with_focal(oracle::random_essential(rng), 1.7);
  const auto a = focal_ratio(x);
  const auto b = focal_ratio(2 * x);
  EXPECT_NEAR(b.numerator, 8 * a.numerator, 1e-12 * std::abs(8 * a.numerator));
  EXPECT_NEAR(b.denominator, 8 * a.denominator, 1e-12 * std::abs(8 * a.denominator));
}

TEST(Focal, DegenerateDenominatorRaises) {
  EXPECT_THROW(focal_squared(Eigen::Matrix3d::Zero()), DegenerateDataError);
  // t along the optical axis and R = I gives a purely in-plane X.
  const Eigen::Matrix3d e = oracle::cross_matrix(Eigen::Vector3d(0, 0, 1));
  EXPECT_THROW(focal_squared(e), DegenerateDataError);
}

}  // namespace
}  // namespace distvar
