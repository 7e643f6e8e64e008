#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "distvar/solver.h"

namespace distvar {

enum class Motion { kGeneric, kSideways };
Motion parse_motion(std::string_view text);
std::string_view motion_name(Motion m);

struct SceneConfig {
  int n_trials = 20000;
  double cube_half_width = 10;
  double distance_min = 20;
  double distance_max = 40;
  // Focal length of the pinhole camera (U2).
  double f_min = 0.5;
  double f_max = 2.5;
  double lambda_min = -0.7;
  double lambda_max = 0;
  double noise_sigma_px = 0;
  double image_scale_px = 1000;
  Motion motion = Motion::kGeneric;
  // Optical axes pass through a uniform point of the cube; otherwise
  // through its center.
  bool random_target = true;
  double rot_noise_deg = 0.01;
  // Baseline length range for sideways motion.
  double baseline_min = 2;
  double baseline_max = 10;
  std::uint64_t seed = 1;
  // 0 uses the hardware concurrency.
  int threads = 0;

  // Throws RangeError for empty or inverted ranges.
  void validate() const;
};

// World to camera: x_cam = R x + t.
struct GroundTruth {
  Eigen::Matrix3d R1 = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t1 = Eigen::Vector3d::Zero();
  Eigen::Matrix3d R2 = Eigen::Matrix3d::Identity();
  Eigen::Vector3d t2 = Eigen::Vector3d::Zero();
  double f = 1;
  double lambda = 0;
  // diag(1/f,1/f,1) * E, unit Frobenius norm.
  Eigen::Matrix3d F = Eigen::Matrix3d::Zero();
  // [F row 0, lambda F_13, F row 1, lambda F_23, F row 2, lambda F_33].
  std::array<double, 12> m{};
};

struct Trial {
  std::array<Correspondence, 7> corrs{};
  GroundTruth truth;
};

// Independent generator for trial trial_index of a run seeded with seed.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index);

// (x, y) * 2 / (1 + sqrt(1 - 4 lambda |x|^2)); the inverse of
// u -> u / (1 + lambda |u|^2). Throws RangeError when the discriminant is
// negative.
std::array<double, 2> apply_division_distortion(const std::array<double, 2>& ideal, double lambda);
std::array<double, 2> undistort_division(const std::array<double, 2>& distorted, double lambda);

// Camera 1 (U1) has f = 1 and division distortion, camera 2 (U2) has focal
// length f.
Trial generate_trial(const SceneConfig& cfg, std::uint64_t trial_index);

// Ground truth epipolar matrices for a pose pair.
Eigen::Matrix3d essential_matrix(const GroundTruth& g);

}  // namespace distvar
