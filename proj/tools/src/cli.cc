#include "distvar_cli/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "distvar/distortion.h"
#include "distvar/elimination_template.h"
#include "distvar/experiment.h"
#include "distvar/models.h"
#include "distvar/multi_param.h"
#include "distvar/scene.h"
#include "distvar/toric.h"

#ifndef DISTVAR_VERSION
#define DISTVAR_VERSION "0.0.0"
#endif

namespace distvar::cli {
namespace {

using nlohmann::json;
using Fp = PrimeField;

// Bad invocation detected after parsing: unreadable files, conflicting
// options. Mapped to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::uint64_t seed = 1;
  bool json = false;
  std::size_t max_pairs = GroebnerOptions{}.max_pairs;

  GroebnerOptions groebner() const {
    GroebnerOptions o;
    o.max_pairs = max_pairs;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (!out) throw UsageError("write to '" + path + "' failed");
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const DimensionError*>(&e)) return "DimensionError";
  if (dynamic_cast<const RangeError*>(&e)) return "RangeError";
  if (dynamic_cast<const BudgetError*>(&e)) return "BudgetError";
  if (dynamic_cast<const DegenerateDataError*>(&e)) return "DegenerateDataError";
  if (dynamic_cast<const NumericError*>(&e)) return "NumericError";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const ConstructionError*>(&e)) return "ConstructionError";
  if (dynamic_cast<const UsageError*>(&e)) return "UsageError";
  return "Error";
}

// An input ideal with the names of its variables.
template <class D>
struct NamedIdeal {
  Ideal<D> ideal;
  std::vector<std::string> names;
};

template <class D>
NamedIdeal<D> ideal_from_text(const D& domain, std::string_view text) {
  const auto list = read_polynomial_list(text);
  if (list.variables.empty()) throw ParseError("ideal has no variables");
  Ideal<D> ideal(domain, static_cast<int>(list.variables.size()));
  for (const auto& line : list.polynomials) ideal.add(parse_polynomial(domain, line, list.variables));
  return {std::move(ideal), list.variables};
}

// Exactly one of --ideal FILE and --model ID.
struct IdealSource {
  std::string file;
  std::string model;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--ideal", file, "ideal file: optional 'vars:' header, one polynomial per line");
    auto* m = cmd->add_option("--model", model, "built-in model: F, E, G, Gprime, Gdoubleprime");
    f->excludes(m);
  }

  template <class D>
  NamedIdeal<D> load(const D& domain) const {
    if (!model.empty()) return {model_ideal<D>(parse_model_id(model), domain), matrix_variable_names()};
    if (file.empty()) throw UsageError("one of --ideal or --model is required");
    return ideal_from_text(domain, read_file(file));
  }
};

// A distortion: --u VECTOR, or --config naming a built-in kind or a JSON file.
using Distortion = std::variant<DistortionVector, MultiParamConfig>;

struct DistortionSource {
  std::string u;
  std::string config;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--u", u, "distortion vector, e.g. 1,2,3");
    auto* b = cmd->add_option("--config", config,
                              "u_both, v_right, two_param, four_param, or a configuration JSON file");
    a->excludes(b);
  }

  Distortion load() const {
    if (!u.empty()) return DistortionVector::parse(u);
    if (config.empty()) throw UsageError("one of --u or --config is required");
    if (config == "u_both" || config == "v_right" || config == "two_param" || config == "four_param") {
      return std::visit([](auto c) -> Distortion { return c; }, model_config(ModelId::kF, parse_config_kind(config)));
    }
    return MultiParamConfig::from_json(read_file(config));
  }
};

std::vector<std::string> ambient_names(std::span<const std::string> base, const Distortion& d) {
  if (const auto* u = std::get_if<DistortionVector>(&d)) return scroll_coordinate_names(base, *u);
  return cayley_coordinate_names(base, std::get<MultiParamConfig>(d));
}

json distortion_json(const Distortion& d) {
  if (const auto* u = std::get_if<DistortionVector>(&d)) return {{"u", u->values()}};
  return {{"config", json::parse(std::get<MultiParamConfig>(d).to_json())}};
}

template <class D>
std::map<int, int> degree_counts(const Ideal<D>& ideal) {
  std::map<int, int> counts;
  for (const auto& g : ideal.generators()) ++counts[static_cast<int>(g.total_degree())];
  return counts;
}

std::string counts_text(const std::map<int, int>& counts) {
  std::string s;
  for (const auto& [deg, n] : counts) {
    if (!s.empty()) s += ", ";
    s += std::to_string(n) + " of degree " + std::to_string(deg);
  }
  return s;
}

// Writes an ideal in the format read_polynomial_list accepts; summary
// lines become '#' comments.
template <class D>
void emit_ideal(std::ostream& out, const Globals& g, const Ideal<D>& ideal, std::span<const std::string> names,
                json summary, const std::vector<std::string>& comments) {
  if (g.json) {
    json gens = json::array();
    for (const auto& p : ideal.generators()) gens.push_back(to_string(p, names));
    summary["variables"] = std::vector<std::string>(names.begin(), names.end());
    summary["generators"] = std::move(gens);
    out << summary.dump(2) << '\n';
    return;
  }
  for (const auto& c : comments) out << "# " << c << '\n';
  out << "vars:";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
  for (const auto& p : ideal.generators()) out << to_string(p, names) << '\n';
}

int cmd_model(const Globals& g, std::ostream& out, const std::string& id, bool print_ideal, const std::string& config,
              bool rational) {
  const ModelInfo& info = model_info(parse_model_id(id));
  json j{{"model", info.name}, {"description", info.description}, {"dimension", info.dimension},
         {"degree", info.degree}};
  std::vector<std::string> lines{"model " + std::string(info.name) + ": " + std::string(info.description),
                                 "dimension " + std::to_string(info.dimension) + ", degree " +
                                     std::to_string(info.degree)};
  if (!config.empty()) {
    const auto c = model_config(info.id, parse_config_kind(config));
    if (const auto* u = std::get_if<DistortionVector>(&c)) {
      j["u"] = u->values();
      std::string s;
      for (int x : u->values()) s += (s.empty() ? "" : ",") + std::to_string(x);
      lines.push_back("config " + config + ": u = " + s);
    } else {
      const auto& mc = std::get<MultiParamConfig>(c);
      j["config"] = json::parse(mc.to_json());
      lines.push_back("config " + config + ": " + mc.to_json());
    }
  }
  if (print_ideal) {
    const auto& names = matrix_variable_names();
    if (rational) {
      emit_ideal(out, g, model_ideal<RationalField>(info.id, RationalField{}), names, j, lines);
    } else {
      emit_ideal(out, g, model_ideal<Fp>(info.id, Fp(g.prime)), names, j, lines);
    }
    return kExitOk;
  }
  if (g.json) {
    out << j.dump(2) << '\n';
  } else {
    for (const auto& l : lines) out << l << '\n';
  }
  return kExitOk;
}

int cmd_distort(const Globals& g, std::ostream& out, const IdealSource& src, const DistortionSource& dsrc,
                bool gens, const std::string& method) {
  const Fp fp(g.prime);
  const auto in = src.load(fp);
  const Distortion d = dsrc.load();
  Ideal<Fp> result;
  if (const auto* u = std::get_if<DistortionVector>(&d)) {
    if (u->size() != in.ideal.num_vars()) throw DimensionError("distortion vector length does not match the ring");
    result = distortion_ideal_generators(in.ideal, *u, g.groebner());
  } else {
    MultiMethod m = MultiMethod::kAuto;
    if (method == "iterated") m = MultiMethod::kIterated;
    if (method == "elimination") m = MultiMethod::kElimination;
    result = multi_distortion_generators(in.ideal, std::get<MultiParamConfig>(d), m, g.groebner());
  }
  const auto names = ambient_names(in.names, d);
  const auto counts = degree_counts(result);
  json summary = distortion_json(d);
  summary["num_generators"] = result.size();
  json by_degree = json::object();
  for (const auto& [deg, n] : counts) by_degree[std::to_string(deg)] = n;
  summary["generators_by_degree"] = by_degree;
  const std::string line = std::to_string(result.size()) + " generators: " + counts_text(counts);
  if (gens) {
    emit_ideal(out, g, result, names, summary, {line});
  } else if (g.json) {
    out << summary.dump(2) << '\n';
  } else {
    out << line << '\n';
  }
  return kExitOk;
}

int cmd_degree(const Globals& g, std::ostream& out, const IdealSource& src, const DistortionSource& dsrc,
               bool details) {
  const Fp fp(g.prime);
  const auto in = src.load(fp);
  const Distortion d = dsrc.load();
  json j = distortion_json(d);
  std::vector<std::string> extra;
  if (const auto* u = std::get_if<DistortionVector>(&d)) {
    if (u->size() != in.ideal.num_vars()) throw DimensionError("distortion vector length does not match the ring");
    const auto dd = distortion_degree_details(in.ideal, *u, g.groebner());
    j["degree"] = dd.degree;
    if (details) {
      const HilbertData h = hilbert_data(in.ideal, g.groebner());
      const int codim = in.ideal.num_vars() - 1 - h.projective_dimension;
      const std::int64_t bound = degree_bound(h.degree, codim, *u);
      j["dimension"] = h.projective_dimension;
      j["degree_x"] = h.degree;
      j["bound"] = bound;
      j["saturation_degrees"] = dd.saturation_degrees;
      extra.push_back("dimension " + std::to_string(h.projective_dimension) + ", degree of X " +
                      std::to_string(h.degree));
      extra.push_back("bound " + std::to_string(bound) + (dd.degree == bound ? " (attained)" : ""));
    }
  } else {
    j["degree"] = multi_distortion_degree(in.ideal, std::get<MultiParamConfig>(d), g.groebner());
  }
  if (g.json) {
    out << j.dump(2) << '\n';
  } else {
    out << j["degree"].get<std::int64_t>() << '\n';
    for (const auto& l : extra) out << l << '\n';
  }
  return kExitOk;
}

int cmd_cayley(const Globals& g, std::ostream& out, const DistortionSource& dsrc, bool iterated) {
  const Distortion d = dsrc.load();
  const MultiParamConfig cfg = std::holds_alternative<MultiParamConfig>(d)
                                   ? std::get<MultiParamConfig>(d)
                                   : MultiParamConfig::from_vector(std::get<DistortionVector>(d));
  const Fp fp(g.prime);
  const Ideal<Fp> toric = cayley_ideal(fp, cfg, g.groebner());
  const HilbertData h = hilbert_data(toric, g.groebner());
  const auto names = cayley_coordinate_names(default_variable_names(cfg.num_groups()), cfg);
  json j{{"config", json::parse(cfg.to_json())}, {"dimension", h.projective_dimension}, {"degree", h.degree}};
  std::vector<std::string> lines{"dimension " + std::to_string(h.projective_dimension) + ", degree " +
                                 std::to_string(h.degree),
                                 std::to_string(toric.size()) + " generators: " + counts_text(degree_counts(toric))};
  if (iterated) {
    const auto dec = iterated_decomposition(cfg);
    if (!dec) {
      j["iterated"] = nullptr;
      lines.push_back("no iterated decomposition");
    } else {
      j["iterated"] = {{"steps", dec->steps}, {"permutation", dec->permutation}};
      for (std::size_t k = 0; k < dec->steps.size(); ++k) {
        std::string s;
        for (int x : dec->steps[k]) s += (s.empty() ? "" : ",") + std::to_string(x);
        lines.push_back("step " + std::to_string(k + 1) + ": u = " + s);
      }
    }
  }
  emit_ideal(out, g, toric, names, j, lines);
  return kExitOk;
}

MinimalSolver load_solver(const std::string& path) {
  if (path.empty()) return default_solver();
  return MinimalSolver(EliminationTemplate::from_json(read_file(path)));
}

int cmd_solve(const Globals& g, std::ostream& out, const std::string& corrs_path, const std::string& template_path,
              bool real_only) {
  const auto corrs = parse_correspondences(read_file(corrs_path));
  const MinimalSolver solver = load_solver(template_path);
  auto sols = solver.solve(corrs);
  const RealCounts counts = count_real(sols);
  const std::size_t n_candidates = sols.size();
  if (real_only) std::erase_if(sols, [](const SolutionCandidate& s) { return !s.is_real; });
  if (g.json) {
    json j{{"n_candidates", n_candidates},
           {"n_real_variety", counts.n_real_variety},
           {"n_real_f", counts.n_real_f},
           {"candidates", json::parse(candidates_to_json(sols))}};
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "real solutions " << counts.n_real_variety << ", with f^2 > 0: " << counts.n_real_f << '\n';
  out << std::setprecision(10);
  for (const auto& s : sols) {
    if (!s.is_real) continue;
    out << "lambda " << s.lambda << "  f^2 " << s.f_squared << "  residual " << std::setprecision(3) << s.residual
        << std::setprecision(10) << '\n';
  }
  return kExitOk;
}

int cmd_template(const Globals& g, std::ostream& out, bool prune, const std::string& out_path,
                 const std::string& check_path) {
  if (!check_path.empty()) {
    const auto tmpl = EliminationTemplate::from_json(read_file(check_path));
    validate_template(tmpl, g.prime, g.seed);
    if (g.json) {
      out << json{{"valid", true}, {"rows", tmpl.rows.size()}, {"columns", tmpl.columns.size()}}.dump(2) << '\n';
    } else {
      out << "valid: " << tmpl.rows.size() << " rows x " << tmpl.columns.size() << " columns\n";
    }
    return kExitOk;
  }
  TemplateOptions opts;
  opts.prune = prune;
  opts.prime = g.prime;
  opts.seed = g.seed;
  const auto tmpl = build_template(opts);
  if (out_path.empty()) {
    out << tmpl.to_json() << '\n';
  } else {
    write_file(out_path, tmpl.to_json() + "\n");
    out << tmpl.rows.size() << " rows x " << tmpl.columns.size() << " columns written to " << out_path << '\n';
  }
  return kExitOk;
}

struct SimulateArgs {
  int trials = 20000;
  double noise = 0;
  std::string motion = "generic";
  int threads = 0;
  bool center_target = false;
  double baseline_min = SceneConfig{}.baseline_min;
  double baseline_max = SceneConfig{}.baseline_max;
  std::string out;
  std::string csv;
  std::string template_path;
};

int cmd_simulate(const Globals& g, std::ostream& out, const SimulateArgs& a) {
  SceneConfig cfg;
  cfg.n_trials = a.trials;
  cfg.noise_sigma_px = a.noise;
  cfg.motion = parse_motion(a.motion);
  cfg.threads = a.threads;
  cfg.random_target = !a.center_target;
  cfg.baseline_min = a.baseline_min;
  cfg.baseline_max = a.baseline_max;
  cfg.seed = g.seed;
  cfg.validate();
  const MinimalSolver solver = load_solver(a.template_path);
  const ExperimentStats stats = run_experiment(cfg, solver);
  if (!a.out.empty()) write_file(a.out, stats.to_json() + "\n");
  if (!a.csv.empty()) write_file(a.csv, stats.to_csv());
  if (g.json) {
    out << stats.to_json() << '\n';
    return kExitOk;
  }
  out << std::fixed << std::setprecision(3);
  out << "trials " << stats.n_trials << ", failed " << stats.n_failed << '\n';
  out << "count  real%    real-f%\n";
  for (int k = 0; k <= ExperimentStats::kMaxCount; ++k) {
    if (stats.real_variety[static_cast<std::size_t>(k)] == 0 && stats.real_f[static_cast<std::size_t>(k)] == 0) continue;
    out << std::setw(5) << k << "  " << std::setw(7) << stats.percent_real_variety(k) << "  " << std::setw(7)
        << stats.percent_real_f(k) << '\n';
  }
  out << "mean real " << stats.mean_real_variety << ", mean real f " << stats.mean_real_f << ", max real f "
      << stats.max_real_f << '\n';
  out << "median log10 error: lambda " << stats.median_log10_err_lambda << ", f " << stats.median_log10_err_f << '\n';
  return kExitOk;
}

int cmd_scene(const Globals& g, std::ostream& out, std::uint64_t index, double noise, const std::string& motion,
              const std::string& out_path) {
  SceneConfig cfg;
  cfg.seed = g.seed;
  cfg.noise_sigma_px = noise;
  cfg.motion = parse_motion(motion);
  cfg.validate();
  const Trial t = generate_trial(cfg, index);
  json truth{{"f", t.truth.f}, {"lambda", t.truth.lambda}};
  std::vector<double> f(9);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) f[static_cast<std::size_t>(3 * r + c)] = t.truth.F(r, c);
  }
  truth["F"] = f;
  const json j{{"correspondences", json::parse(correspondences_to_json(t.corrs))}, {"truth", truth}};
  if (out_path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_file(out_path, j.dump(2) + "\n");
  }
  return kExitOk;
}

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

std::string version_string() {
  return std::string("distvar ") + DISTVAR_VERSION + " (template format " +
         std::to_string(EliminationTemplate::kVersion) + ")";
}

std::vector<Correspondence> parse_correspondences(std::string_view text) {
  try {
    json j = json::parse(text);
    if (j.is_object()) j = j.at("correspondences");
    if (!j.is_array()) throw ParseError("correspondences must be a JSON array");
    std::vector<Correspondence> out;
    for (const auto& e : j) {
      Correspondence c;
      c.u1 = e.at("U1").get<std::array<double, 2>>();
      c.u2 = e.at("U2").get<std::array<double, 2>>();
      out.push_back(c);
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("correspondence JSON: ") + e.what());
  }
}

std::string correspondences_to_json(std::span<const Correspondence> corrs) {
  json j = json::array();
  for (const auto& c : corrs) j.push_back({{"U1", c.u1}, {"U2", c.u2}});
  return j.dump();
}

std::string candidates_to_json(std::span<const SolutionCandidate> sols) {
  json j = json::array();
  for (const auto& s : sols) {
    json gamma = json::array();
    for (const auto& z : s.gamma) gamma.push_back({z.real(), z.imag()});
    json c{{"gamma", gamma}, {"is_real", s.is_real}, {"residual", number_or_null(s.residual)}};
    if (s.is_real) {
      std::vector<double> f(9);
      for (int r = 0; r < 3; ++r) {
        for (int k = 0; k < 3; ++k) f[static_cast<std::size_t>(3 * r + k)] = s.F(r, k);
      }
      c["F"] = f;
      c["lambda"] = number_or_null(s.lambda);
      c["f2"] = number_or_null(s.f_squared);
      c["f_real"] = s.f_real;
    }
    j.push_back(std::move(c));
  }
  return j.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Distortion varieties and the f+E+lambda minimal solver", "distvar"};
  app.set_version_flag("--version", version_string());
  app.add_option("--prime", g.prime, "prime modulus for exact computations")->capture_default_str();
  app.add_option("--seed", g.seed, "random seed")->capture_default_str();
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--max-pairs", g.max_pairs, "Groebner pair budget")->capture_default_str();
  app.require_subcommand(1);

  std::string model_id, model_config_kind;
  bool print_ideal = false, rational = false;
  auto* model = app.add_subcommand("model", "describe a built-in two-view model");
  model->add_option("--id", model_id, "F, E, G, Gprime, Gdoubleprime")->required();
  model->add_flag("--print-ideal", print_ideal, "print the generators");
  model->add_flag("--rational", rational, "print coefficients over Q");
  model->add_option("--config", model_config_kind, "u_both, v_right, two_param, four_param");

  IdealSource distort_src, degree_src;
  DistortionSource distort_d, degree_d, cayley_d;
  bool gens = false, details = false, iterated = false;
  std::string method = "auto";
  auto* distort = app.add_subcommand("distort", "generators of a distortion variety");
  distort_src.add_to(distort);
  distort_d.add_to(distort);
  distort->add_flag("--gens", gens, "print the generators");
  distort->add_option("--method", method, "multi-parameter method")
      ->check(CLI::IsMember({"auto", "iterated", "elimination"}));

  auto* degree = app.add_subcommand("degree", "degree of a distortion variety");
  degree_src.add_to(degree);
  degree_d.add_to(degree);
  degree->add_flag("--details", details, "also print the dimension and the degree bound");

  auto* cayley = app.add_subcommand("cayley", "toric ideal of the Cayley configuration");
  cayley_d.add_to(cayley);
  cayley->add_flag("--iterated", iterated, "print the iterated one-parameter decomposition");

  std::string corrs_path, template_path;
  bool real_only = false;
  auto* solve = app.add_subcommand("solve", "run the minimal solver on seven correspondences");
  solve->add_option("--corrs", corrs_path, "correspondence JSON")->required();
  solve->add_option("--template", template_path, "elimination template JSON");
  solve->add_flag("--real-only", real_only, "list real candidates only");

  bool prune = false;
  std::string template_out, template_check;
  auto* tmpl = app.add_subcommand("template", "build or check the elimination template");
  tmpl->add_flag("--prune", prune, "keep an independent subset of rows");
  tmpl->add_option("--out", template_out, "output file");
  tmpl->add_option("--check", template_check, "validate a template file");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo experiment on synthetic scenes");
  simulate->add_option("--trials", sim.trials)->capture_default_str();
  simulate->add_option("--noise", sim.noise, "pixel noise sigma")->capture_default_str();
  simulate->add_option("--motion", sim.motion)->check(CLI::IsMember({"generic", "sideways"}))->capture_default_str();
  simulate->add_option("--threads", sim.threads, "0 uses all cores")->capture_default_str();
  simulate->add_flag("--center-target", sim.center_target, "aim cameras at the cube center");
  simulate->add_option("--baseline-min", sim.baseline_min)->capture_default_str();
  simulate->add_option("--baseline-max", sim.baseline_max)->capture_default_str();
  simulate->add_option("--out", sim.out, "JSON report");
  simulate->add_option("--csv", sim.csv, "CSV histograms");
  simulate->add_option("--template", sim.template_path, "elimination template JSON");

  std::uint64_t scene_index = 0;
  double scene_noise = 0;
  std::string scene_motion = "generic", scene_out;
  auto* scene = app.add_subcommand("scene", "write one synthetic seven-point instance");
  scene->add_option("--index", scene_index)->capture_default_str();
  scene->add_option("--noise", scene_noise)->capture_default_str();
  scene->add_option("--motion", scene_motion)->check(CLI::IsMember({"generic", "sideways"}));
  scene->add_option("--out", scene_out, "output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (model->parsed()) return cmd_model(g, out, model_id, print_ideal, model_config_kind, rational);
    if (distort->parsed()) return cmd_distort(g, out, distort_src, distort_d, gens, method);
    if (degree->parsed()) return cmd_degree(g, out, degree_src, degree_d, details);
    if (cayley->parsed()) return cmd_cayley(g, out, cayley_d, iterated);
    if (solve->parsed()) return cmd_solve(g, out, corrs_path, template_path, real_only);
    if (tmpl->parsed()) return cmd_template(g, out, prune, template_out, template_check);
    if (simulate->parsed()) return cmd_simulate(g, out, sim);
    if (scene->parsed()) return cmd_scene(g, out, scene_index, scene_noise, scene_motion, scene_out);
  } catch (const UsageError& e) {
    if (g.json) {
      err << json{{"error", {{"kind", "UsageError"}, {"message", e.what()}}}}.dump() << '\n';
    } else {
      err << "usage error: " << e.what() << '\n';
    }
    return kExitUsage;
  } catch (const Error& e) {
    if (g.json) {
      err << json{{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}}.dump() << '\n';
    } else {
      err << "error: " << error_kind(e) << ": " << e.what() << '\n';
    }
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace distvar::cli
