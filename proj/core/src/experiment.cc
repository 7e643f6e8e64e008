#include "distvar/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "distvar/errors.h"

namespace distvar {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double relative_error(double estimate, double truth) {
  const double diff = std::abs(estimate - truth);
  return truth == 0 ? diff : diff / std::abs(truth);
}

double median(std::vector<double> v) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return kNaN;
  double s = 0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// JSON has no NaN; those become null.
nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr); }
double number(const nlohmann::json& j) { return j.is_null() ? kNaN : j.get<double>(); }

nlohmann::json config_json(const SceneConfig& c) {
  return {{"n_trials", c.n_trials},
          {"cube_half_width", c.cube_half_width},
          {"distance", {c.distance_min, c.distance_max}},
          {"f_range", {c.f_min, c.f_max}},
          {"lambda_range", {c.lambda_min, c.lambda_max}},
          {"noise_sigma_px", c.noise_sigma_px},
          {"image_scale_px", c.image_scale_px},
          {"motion", std::string(motion_name(c.motion))},
          {"random_target", c.random_target},
          {"rot_noise_deg", c.rot_noise_deg},
          {"baseline", {c.baseline_min, c.baseline_max}},
          {"seed", c.seed}};
}

SceneConfig config_from_json(const nlohmann::json& j) {
  SceneConfig c;
  c.n_trials = j.at("n_trials").get<int>();
  c.cube_half_width = j.at("cube_half_width").get<double>();
  c.distance_min = j.at("distance").at(0).get<double>();
  c.distance_max = j.at("distance").at(1).get<double>();
  c.f_min = j.at("f_range").at(0).get<double>();
  c.f_max = j.at("f_range").at(1).get<double>();
  c.lambda_min = j.at("lambda_range").at(0).get<double>();
  c.lambda_max = j.at("lambda_range").at(1).get<double>();
  c.noise_sigma_px = j.at("noise_sigma_px").get<double>();
  c.image_scale_px = j.at("image_scale_px").get<double>();
  c.motion = parse_motion(j.at("motion").get<std::string>());
  c.random_target = j.at("random_target").get<bool>();
  c.rot_noise_deg = j.at("rot_noise_deg").get<double>();
  c.baseline_min = j.at("baseline").at(0).get<double>();
  c.baseline_max = j.at("baseline").at(1).get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

nlohmann::json histogram_json(const Histogram& h) {
  return {{"lo", h.lo}, {"hi", h.hi}, {"width", h.width}, {"counts", h.counts}, {"underflow", h.underflow},
          {"overflow", h.overflow}};
}

Histogram histogram_from_json(const nlohmann::json& j) {
  Histogram h;
  h.lo = j.at("lo").get<double>();
  h.hi = j.at("hi").get<double>();
  h.width = j.at("width").get<double>();
  h.counts = j.at("counts").get<std::vector<std::int64_t>>();
  h.underflow = j.at("underflow").get<std::int64_t>();
  h.overflow = j.at("overflow").get<std::int64_t>();
  return h;
}

bool same_number(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

}  // namespace

Histogram::Histogram() : counts(static_cast<std::size_t>(std::lround((hi - lo) / width)), 0) {}

void Histogram::add(double x) {
  if (std::isnan(x)) return;
  if (x < lo) {
    ++underflow;
  } else if (x >= hi) {
    ++overflow;
  } else {
    const auto bin = std::min(counts.size() - 1, static_cast<std::size_t>((x - lo) / width));
    ++counts[bin];
  }
}

std::int64_t Histogram::total() const {
  std::int64_t s = underflow + overflow;
  for (auto c : counts) s += c;
  return s;
}

double ExperimentStats::percent_real_variety(int k) const {
  return n_trials ? 100.0 * static_cast<double>(real_variety[static_cast<std::size_t>(k)]) / static_cast<double>(n_trials) : 0;
}

double ExperimentStats::percent_real_f(int k) const {
  return n_trials ? 100.0 * static_cast<double>(real_f[static_cast<std::size_t>(k)]) / static_cast<double>(n_trials) : 0;
}

TrialResult run_trial(const SceneConfig& cfg, std::uint64_t index, const MinimalSolver& solver,
                      const SolverOptions& options) {
  TrialResult r;
  r.index = index;
  r.log10_err_lambda = kNaN;
  r.log10_err_f = kNaN;
  try {
    const Trial trial = generate_trial(cfg, index);
    r.truth = trial.truth;
    const auto sols = solver.solve(trial.corrs, options);
    r.ok = true;
    r.n_candidates = static_cast<int>(sols.size());
    const RealCounts counts = count_real(sols);
    r.n_real_variety = counts.n_real_variety;
    r.n_real_f = counts.n_real_f;
    double best_score = std::numeric_limits<double>::infinity();
    for (const auto& s : sols) {
      r.max_residual = std::max(r.max_residual, s.residual);
      if (!s.is_real || !s.f_real) continue;
      const double el = relative_error(s.lambda, trial.truth.lambda);
      const double ef = relative_error(std::sqrt(s.f_squared), trial.truth.f);
      if (std::max(el, ef) < best_score) {
        best_score = std::max(el, ef);
        r.best = s;
        // Exact recoveries are reported at the double precision floor.
        r.log10_err_lambda = std::log10(std::max(el, 1e-17));
        r.log10_err_f = std::log10(std::max(ef, 1e-17));
      }
    }
  } catch (const Error& e) {
    r.ok = false;
    r.error = e.what();
  }
  return r;
}

ExperimentStats aggregate(const SceneConfig& cfg, std::span<const TrialResult> trials) {
  ExperimentStats s;
  s.config = cfg;
  s.n_trials = static_cast<std::int64_t>(trials.size());
  std::vector<double> el, ef, rv, rf;
  for (const auto& t : trials) {
    if (!t.ok) {
      ++s.n_failed;
      continue;
    }
    ++s.real_variety[static_cast<std::size_t>(std::clamp(t.n_real_variety, 0, ExperimentStats::kMaxCount))];
    ++s.real_f[static_cast<std::size_t>(std::clamp(t.n_real_f, 0, ExperimentStats::kMaxCount))];
    rv.push_back(t.n_real_variety);
    rf.push_back(t.n_real_f);
    s.max_real_f = std::max(s.max_real_f, t.n_real_f);
    if (t.max_residual <= 1e-6) ++s.n_residual_ok;
    if (t.best) {
      ++s.n_with_best;
      s.err_lambda.add(t.log10_err_lambda);
      s.err_f.add(t.log10_err_f);
      el.push_back(t.log10_err_lambda);
      ef.push_back(t.log10_err_f);
      if (t.log10_err_lambda <= -4 && t.log10_err_f <= -4) ++s.n_recovered;
    }
  }
  s.median_log10_err_lambda = median(el);
  s.median_log10_err_f = median(ef);
  s.mean_log10_err_lambda = mean(el);
  s.mean_log10_err_f = mean(ef);
  s.mean_real_variety = mean(rv);
  s.mean_real_f = mean(rf);
  return s;
}

ExperimentStats run_experiment(const SceneConfig& cfg, const MinimalSolver& solver, const SolverOptions& options,
                               std::vector<TrialResult>* trials) {
  cfg.validate();
  std::vector<TrialResult> results(static_cast<std::size_t>(cfg.n_trials));
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(cfg.threads > 0 ? static_cast<unsigned>(cfg.threads) : hw,
                                              static_cast<unsigned>(cfg.n_trials));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) results[i] = run_trial(cfg, i, solver, options);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  ExperimentStats stats = aggregate(cfg, results);
  if (trials) *trials = std::move(results);
  return stats;
}

std::string ExperimentStats::to_json() const {
  nlohmann::json j;
  j["format"] = "distvar-experiment";
  j["config"] = config_json(config);
  j["n_trials"] = n_trials;
  j["n_failed"] = n_failed;
  j["real_variety"] = real_variety;
  j["real_f"] = real_f;
  j["err_lambda"] = histogram_json(err_lambda);
  j["err_f"] = histogram_json(err_f);
  j["n_with_best"] = n_with_best;
  j["n_recovered"] = n_recovered;
  j["n_residual_ok"] = n_residual_ok;
  j["median_log10_err_lambda"] = number(median_log10_err_lambda);
  j["median_log10_err_f"] = number(median_log10_err_f);
  j["mean_log10_err_lambda"] = number(mean_log10_err_lambda);
  j["mean_log10_err_f"] = number(mean_log10_err_f);
  j["mean_real_variety"] = number(mean_real_variety);
  j["mean_real_f"] = number(mean_real_f);
  j["max_real_f"] = max_real_f;
  nlohmann::json pv = nlohmann::json::object(), pf = nlohmann::json::object();
  for (int k = 0; k <= kMaxCount; ++k) {
    pv[std::to_string(k)] = percent_real_variety(k);
    pf[std::to_string(k)] = percent_real_f(k);
  }
  j["percent_real_variety"] = pv;
  j["percent_real_f"] = pf;
  return j.dump(2);
}

ExperimentStats ExperimentStats::from_json(std::string_view text) {
  ExperimentStats s;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != "distvar-experiment") throw ParseError("not an experiment report");
    s.config = config_from_json(j.at("config"));
    s.n_trials = j.at("n_trials").get<std::int64_t>();
    s.n_failed = j.at("n_failed").get<std::int64_t>();
    s.real_variety = j.at("real_variety").get<std::array<std::int64_t, kMaxCount + 1>>();
    s.real_f = j.at("real_f").get<std::array<std::int64_t, kMaxCount + 1>>();
    s.err_lambda = histogram_from_json(j.at("err_lambda"));
    s.err_f = histogram_from_json(j.at("err_f"));
    s.n_with_best = j.at("n_with_best").get<std::int64_t>();
    s.n_recovered = j.at("n_recovered").get<std::int64_t>();
    s.n_residual_ok = j.at("n_residual_ok").get<std::int64_t>();
    s.median_log10_err_lambda = number(j.at("median_log10_err_lambda"));
    s.median_log10_err_f = number(j.at("median_log10_err_f"));
    s.mean_log10_err_lambda = number(j.at("mean_log10_err_lambda"));
    s.mean_log10_err_f = number(j.at("mean_log10_err_f"));
    s.mean_real_variety = number(j.at("mean_real_variety"));
    s.mean_real_f = number(j.at("mean_real_f"));
    s.max_real_f = j.at("max_real_f").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("experiment JSON: ") + e.what());
  }
  return s;
}

std::string ExperimentStats::to_csv() const {
  std::ostringstream out;
  out << "table,count,trials,percent\n";
  for (int k = 0; k <= kMaxCount; ++k) {
    out << "real_variety," << k << ',' << real_variety[static_cast<std::size_t>(k)] << ',' << percent_real_variety(k) << '\n';
  }
  for (int k = 0; k <= kMaxCount; ++k) {
    out << "real_f," << k << ',' << real_f[static_cast<std::size_t>(k)] << ',' << percent_real_f(k) << '\n';
  }
  out << "failed,," << n_failed << ',' << (n_trials ? 100.0 * static_cast<double>(n_failed) / static_cast<double>(n_trials) : 0.0) << '\n';
  return out.str();
}

bool operator==(const ExperimentStats& a, const ExperimentStats& b) {
  return config_json(a.config) == config_json(b.config) && a.n_trials == b.n_trials && a.n_failed == b.n_failed &&
         a.real_variety == b.real_variety && a.real_f == b.real_f && a.err_lambda == b.err_lambda &&
         a.err_f == b.err_f && a.n_with_best == b.n_with_best && a.n_recovered == b.n_recovered &&
         a.n_residual_ok == b.n_residual_ok && same_number(a.median_log10_err_lambda, b.median_log10_err_lambda) &&
         same_number(a.median_log10_err_f, b.median_log10_err_f) &&
         same_number(a.mean_log10_err_lambda, b.mean_log10_err_lambda) &&
         same_number(a.mean_log10_err_f, b.mean_log10_err_f) && same_number(a.mean_real_variety, b.mean_real_variety) &&
         same_number(a.mean_real_f, b.mean_real_f) && a.max_real_f == b.max_real_f;
}

}  // namespace distvar
