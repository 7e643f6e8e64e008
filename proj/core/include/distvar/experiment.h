#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distvar/scene.h"
#include "distvar/solver.h"

namespace distvar {

struct TrialResult {
  std::uint64_t index = 0;
  GroundTruth truth;
  // False when solve() threw; error holds the message.
  bool ok = false;
  std::string error;
  int n_candidates = 0;
  int n_real_variety = 0;
  int n_real_f = 0;
  double max_residual = 0;
  // The real candidate with f^2 > 0 closest to the ground truth.
  std::optional<SolutionCandidate> best;
  // NaN without a best candidate.
  double log10_err_lambda = 0;
  double log10_err_f = 0;
};

// Fixed-width bins over [lo, hi) plus under- and overflow counts.
struct Histogram {
  double lo = -16;
  double hi = 2;
  double width = 0.5;
  std::vector<std::int64_t> counts;
  std::int64_t underflow = 0;
  std::int64_t overflow = 0;

  Histogram();
  void add(double x);
  std::int64_t total() const;
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct ExperimentStats {
  static constexpr int kMaxCount = 23;

  SceneConfig config;
  std::int64_t n_trials = 0;
  std::int64_t n_failed = 0;
  // Indexed by count 0..23; with n_failed they sum to n_trials.
  std::array<std::int64_t, kMaxCount + 1> real_variety{};
  std::array<std::int64_t, kMaxCount + 1> real_f{};
  Histogram err_lambda;
  Histogram err_f;
  // Trials with a best candidate.
  std::int64_t n_with_best = 0;
  // Trials whose best candidate is within 1e-4 relative in lambda and f.
  std::int64_t n_recovered = 0;
  // Trials where every candidate has residual <= 1e-6.
  std::int64_t n_residual_ok = 0;
  double median_log10_err_lambda = 0;
  double median_log10_err_f = 0;
  double mean_log10_err_lambda = 0;
  double mean_log10_err_f = 0;
  double mean_real_variety = 0;
  double mean_real_f = 0;
  int max_real_f = 0;

  double percent_real_variety(int k) const;
  double percent_real_f(int k) const;

  std::string to_json() const;
  // Long format: table,count,trials,percent for both count tables.
  std::string to_csv() const;
  static ExperimentStats from_json(std::string_view text);
};

bool operator==(const ExperimentStats& a, const ExperimentStats& b);

TrialResult run_trial(const SceneConfig& cfg, std::uint64_t index, const MinimalSolver& solver,
                      const SolverOptions& options = {});

// Results do not depend on cfg.threads.
ExperimentStats aggregate(const SceneConfig& cfg, std::span<const TrialResult> trials);

ExperimentStats run_experiment(const SceneConfig& cfg, const MinimalSolver& solver = default_solver(),
                               const SolverOptions& options = {}, std::vector<TrialResult>* trials = nullptr);

}  // namespace distvar
