#include "distvar/scene.h"

#include <cmath>
#include <numbers>

#include <Eigen/Geometry>

#include "distvar/errors.h"

namespace distvar {
namespace {

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0, 1);
  for (;;) {
    Eigen::Vector3d v(n(rng), n(rng), n(rng));
    if (v.norm() > 1e-9) return v.normalized();
  }
}

// Rows are the camera axes; the optical axis points from center to target.
Eigen::Matrix3d look_at(const Eigen::Vector3d& center, const Eigen::Vector3d& target, std::mt19937_64& rng) {
  const Eigen::Vector3d z = (target - center).normalized();
  Eigen::Vector3d helper = random_unit(rng);
  while (std::abs(helper.dot(z)) > 0.9) helper = random_unit(rng);
  const Eigen::Vector3d x = helper.cross(z).normalized();
  const Eigen::Vector3d y = z.cross(x);
  Eigen::Matrix3d r;
  r.row(0) = x;
  r.row(1) = y;
  r.row(2) = z;
  return r;
}

Eigen::Matrix3d small_rotation(double degrees, std::mt19937_64& rng) {
  return Eigen::AngleAxisd(degrees * std::numbers::pi / 180.0, random_unit(rng)).toRotationMatrix();
}

Eigen::Matrix3d skew(const Eigen::Vector3d& t) {
  Eigen::Matrix3d s;
  s << 0, -t.z(), t.y(), t.z(), 0, -t.x(), -t.y(), t.x(), 0;
  return s;
}

}  // namespace

Motion parse_motion(std::string_view text) {
  if (text == "generic") return Motion::kGeneric;
  if (text == "sideways") return Motion::kSideways;
  throw ParseError("unknown motion '" + std::string(text) + "' (expected generic, sideways)");
}

std::string_view motion_name(Motion m) { return m == Motion::kGeneric ? "generic" : "sideways"; }

void SceneConfig::validate() const {
  if (n_trials < 1) throw RangeError("n_trials must be at least 1");
  if (!(cube_half_width > 0)) throw RangeError("cube half-width must be positive");
  if (!(distance_min > 0 && distance_min <= distance_max)) throw RangeError("bad camera distance range");
  if (!(f_min > 0 && f_min <= f_max)) throw RangeError("bad focal length range");
  if (!(lambda_min <= lambda_max && lambda_max <= 0)) throw RangeError("lambda range must lie in (-inf, 0]");
  if (!(noise_sigma_px >= 0) || !(image_scale_px > 0)) throw RangeError("bad noise parameters");
  if (!(rot_noise_deg >= 0) || !(baseline_min > 0 && baseline_min <= baseline_max)) {
    throw RangeError("bad sideways motion parameters");
  }
  if (threads < 0) throw RangeError("thread count must be non-negative");
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial_index), static_cast<std::uint32_t>(trial_index >> 32)};
  return std::mt19937_64(seq);
}

std::array<double, 2> apply_division_distortion(const std::array<double, 2>& ideal, double lambda) {
  const double r2 = ideal[0] * ideal[0] + ideal[1] * ideal[1];
  const double disc = 1.0 - 4.0 * lambda * r2;
  if (disc < 0) throw RangeError("division model has no preimage for this point");
  const double s = 2.0 / (1.0 + std::sqrt(disc));
  return {s * ideal[0], s * ideal[1]};
}

std::array<double, 2> undistort_division(const std::array<double, 2>& distorted, double lambda) {
  const double w = 1.0 + lambda * (distorted[0] * distorted[0] + distorted[1] * distorted[1]);
  return {distorted[0] / w, distorted[1] / w};
}

Eigen::Matrix3d essential_matrix(const GroundTruth& g) {
  const Eigen::Matrix3d r = g.R2 * g.R1.transpose();
  const Eigen::Vector3d t = g.t2 - r * g.t1;
  return skew(t) * r;
}

Trial generate_trial(const SceneConfig& cfg, std::uint64_t trial_index) {
  std::mt19937_64 rng = trial_rng(cfg.seed, trial_index);
  std::uniform_real_distribution<double> cube(-cfg.cube_half_width, cfg.cube_half_width);
  std::uniform_real_distribution<double> dist(cfg.distance_min, cfg.distance_max);
  std::uniform_real_distribution<double> focal(cfg.f_min, cfg.f_max);
  std::uniform_real_distribution<double> lam(cfg.lambda_min, cfg.lambda_max);
  std::normal_distribution<double> noise(0.0, cfg.noise_sigma_px / cfg.image_scale_px);

  Trial trial;
  GroundTruth& g = trial.truth;
  g.f = focal(rng);
  g.lambda = lam(rng);
  auto target = [&] {
    return cfg.random_target ? Eigen::Vector3d(cube(rng), cube(rng), cube(rng)) : Eigen::Vector3d::Zero();
  };
  const Eigen::Vector3d c1 = dist(rng) * random_unit(rng);
  g.R1 = look_at(c1, target(), rng);
  Eigen::Vector3d c2;
  if (cfg.motion == Motion::kGeneric) {
    c2 = dist(rng) * random_unit(rng);
    g.R2 = look_at(c2, target(), rng);
    g.t1 = -g.R1 * c1;
    g.t2 = -g.R2 * c2;
  } else {
    std::uniform_real_distribution<double> base(cfg.baseline_min, cfg.baseline_max);
    std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
    const double a = angle(rng);
    const Eigen::Vector3d lateral = std::cos(a) * g.R1.row(0).transpose() + std::sin(a) * g.R1.row(1).transpose();
    c2 = c1 + base(rng) * lateral;
    g.R2 = g.R1;
    g.t1 = -g.R1 * c1;
    g.t2 = -g.R2 * c2;
    // P -> P * diag(Q, 1) tilts the optical axis and moves the center.
    g.R1 = g.R1 * small_rotation(cfg.rot_noise_deg, rng);
    g.R2 = g.R2 * small_rotation(cfg.rot_noise_deg, rng);
  }

  for (auto& corr : trial.corrs) {
    for (int attempt = 0;; ++attempt) {
      const Eigen::Vector3d x(cube(rng), cube(rng), cube(rng));
      const Eigen::Vector3d p1 = g.R1 * x + g.t1;
      const Eigen::Vector3d p2 = g.R2 * x + g.t2;
      if (p1.z() > 1e-6 && p2.z() > 1e-6) {
        corr.u1 = apply_division_distortion({p1.x() / p1.z(), p1.y() / p1.z()}, g.lambda);
        corr.u2 = {g.f * p2.x() / p2.z(), g.f * p2.y() / p2.z()};
        break;
      }
      if (attempt > 1000) throw DegenerateDataError("could not sample points in front of both cameras");
    }
  }
  if (cfg.noise_sigma_px > 0) {
    for (auto& corr : trial.corrs) {
      for (double* v : {&corr.u1[0], &corr.u1[1], &corr.u2[0], &corr.u2[1]}) *v += noise(rng);
    }
  }

  const Eigen::Matrix3d k_inv = Eigen::Vector3d(1.0 / g.f, 1.0 / g.f, 1.0).asDiagonal();
  g.F = k_inv * essential_matrix(g);
  g.F /= g.F.norm();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) g.m[static_cast<std::size_t>(4 * i + j)] = g.F(i, j);
    g.m[static_cast<std::size_t>(4 * i + 3)] = g.lambda * g.F(i, 2);
  }
  return trial;
}

}  // namespace distvar
