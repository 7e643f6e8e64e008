#include "distvar/multi_param.h"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

namespace distvar {

MultiParamConfig::MultiParamConfig(int r, std::vector<std::vector<Point>> groups) : r_(r), groups_(std::move(groups)) {
  if (r_ < 1) throw RangeError("a configuration needs at least one parameter");
  if (groups_.empty()) throw DimensionError("a configuration needs at least one group");
  for (const auto& g : groups_) {
    if (g.empty()) throw RangeError("every group of a configuration must be non-empty");
    std::set<Point> seen;
    for (const auto& p : g) {
      if (static_cast<int>(p.size()) != r_) throw DimensionError("configuration point has the wrong length");
      if (std::any_of(p.begin(), p.end(), [](int x) { return x < 0; })) {
        throw RangeError("configuration points must be in N^r");
      }
      if (!seen.insert(p).second) throw RangeError("repeated point in a configuration group");
    }
    offsets_.push_back(total_);
    total_ += static_cast<int>(g.size());
  }
  if (total_ > kMaxVariables) throw DimensionError("configuration gives too many coordinates");
}

MultiParamConfig MultiParamConfig::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    return MultiParamConfig(j.at("r").get<int>(), j.at("groups").get<std::vector<std::vector<Point>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("configuration JSON: ") + e.what());
  }
}

std::string MultiParamConfig::to_json() const {
  nlohmann::json j;
  j["r"] = r_;
  j["groups"] = groups_;
  return j.dump();
}

MultiParamConfig MultiParamConfig::from_vector(const DistortionVector& u) {
  std::vector<std::vector<Point>> groups;
  for (int x : u.values()) {
    std::vector<Point> g;
    for (int a = 0; a <= x; ++a) g.push_back({a});
    groups.push_back(std::move(g));
  }
  return MultiParamConfig(1, std::move(groups));
}

int MultiParamConfig::index(int i, int j) const {
  if (i < 0 || i >= num_groups() || j < 0 || j >= static_cast<int>(groups_[static_cast<std::size_t>(i)].size())) {
    throw RangeError("configuration coordinate out of range");
  }
  return offsets_[static_cast<std::size_t>(i)] + j;
}

IntMatrix MultiParamConfig::augmented_matrix() const {
  IntMatrix a(static_cast<std::size_t>(r_) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(total_), 0));
  int col = 0;
  for (const auto& g : groups_) {
    for (const auto& p : g) {
      for (int k = 0; k < r_; ++k) a[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] = p[static_cast<std::size_t>(k)];
      a[static_cast<std::size_t>(r_)][static_cast<std::size_t>(col)] = 1;
      ++col;
    }
  }
  return a;
}

IntMatrix cayley_parametrization(const MultiParamConfig& cfg) {
  const int r = cfg.r();
  IntMatrix a(static_cast<std::size_t>(r + cfg.num_groups()),
              std::vector<std::int64_t>(static_cast<std::size_t>(cfg.ambient_size()), 0));
  int col = 0;
  for (int i = 0; i < cfg.num_groups(); ++i) {
    for (const auto& p : cfg.groups()[static_cast<std::size_t>(i)]) {
      for (int k = 0; k < r; ++k) a[static_cast<std::size_t>(k)][static_cast<std::size_t>(col)] = p[static_cast<std::size_t>(k)];
      a[static_cast<std::size_t>(r + i)][static_cast<std::size_t>(col)] = 1;
      ++col;
    }
  }
  return a;
}

std::vector<std::string> cayley_coordinate_names(std::span<const std::string> base, const MultiParamConfig& cfg) {
  if (static_cast<int>(base.size()) != cfg.num_groups()) throw DimensionError("one base name per group is required");
  const auto defaults = default_variable_names(cfg.num_groups());
  const bool default_names = std::equal(base.begin(), base.end(), defaults.begin()) && cfg.num_groups() <= 26;
  std::vector<std::string> out;
  for (int i = 0; i < cfg.num_groups(); ++i) {
    const auto size = cfg.groups()[static_cast<std::size_t>(i)].size();
    for (std::size_t j = 0; j < size; ++j) {
      if (default_names) {
        out.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(j));
      } else {
        out.push_back(j == 0 ? base[static_cast<std::size_t>(i)] : base[static_cast<std::size_t>(i)] + "_" + std::to_string(j));
      }
    }
  }
  return out;
}

std::optional<IteratedDecomposition> iterated_decomposition(const MultiParamConfig& cfg) {
  struct Coord {
    int group;
    std::vector<int> prefix;
  };
  std::vector<Coord> stage;
  for (int i = 0; i < cfg.num_groups(); ++i) stage.push_back({i, {}});
  IteratedDecomposition out;
  for (int k = 0; k < cfg.r(); ++k) {
    std::vector<int> w;
    std::vector<Coord> next;
    for (const auto& c : stage) {
      std::set<int> fiber;
      for (const auto& p : cfg.groups()[static_cast<std::size_t>(c.group)]) {
        if (std::equal(c.prefix.begin(), c.prefix.end(), p.begin())) fiber.insert(p[static_cast<std::size_t>(k)]);
      }
      const int top = *fiber.rbegin();
      if (static_cast<int>(fiber.size()) != top + 1) return std::nullopt;
      w.push_back(top);
      for (int b = 0; b <= top; ++b) {
        auto prefix = c.prefix;
        prefix.push_back(b);
        next.push_back({c.group, std::move(prefix)});
      }
    }
    if (k + 1 == cfg.r()) {
      out.nested_last.assign(static_cast<std::size_t>(cfg.num_groups()), {});
      for (std::size_t s = 0; s < stage.size(); ++s) out.nested_last[static_cast<std::size_t>(stage[s].group)].push_back(w[s]);
    }
    out.steps.push_back(std::move(w));
    stage = std::move(next);
  }
  for (const auto& c : stage) {
    const auto& g = cfg.groups()[static_cast<std::size_t>(c.group)];
    const auto it = std::find(g.begin(), g.end(), c.prefix);
    out.permutation.push_back(cfg.index(c.group, static_cast<int>(it - g.begin())));
  }
  return out;
}

namespace {

bool all_zero(const std::vector<int>& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

template <class D>
Ideal<D> by_elimination(const Ideal<D>& ideal, const MultiParamConfig& cfg, const GroebnerOptions& options) {
  const int r = cfg.r();
  const int n1 = cfg.num_groups();
  const int amb = cfg.ambient_size();
  const int total = r + n1 + amb;
  if (total > kMaxVariables) throw DimensionError("elimination ring for this configuration is too large");
  const D& d = ideal.domain();
  std::vector<int> x_pos(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) x_pos[static_cast<std::size_t>(i)] = r + i;
  Ideal<D> graph(d, total);
  for (const auto& g : ideal.generators()) graph.add(g.remap(total, x_pos));
  for (int i = 0; i < n1; ++i) {
    const auto& group = cfg.groups()[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < group.size(); ++j) {
      Monomial m(total);
      m.set(r + i, 1);
      for (int k = 0; k < r; ++k) m.set(k, group[j][static_cast<std::size_t>(k)]);
      graph.add(Polynomial<D>::variable(d, total, r + n1 + cfg.index(i, static_cast<int>(j))) -
                Polynomial<D>::term(d, m, d.one()));
    }
  }
  std::vector<int> drop(static_cast<std::size_t>(r + n1));
  for (int k = 0; k < r + n1; ++k) drop[static_cast<std::size_t>(k)] = k;
  const Ideal<D> elim = eliminate(graph, drop, options);
  std::vector<int> keep(static_cast<std::size_t>(amb));
  for (int c = 0; c < amb; ++c) keep[static_cast<std::size_t>(c)] = r + n1 + c;
  Ideal<D> out(d, amb);
  for (const auto& g : elim.generators()) out.add(drop_variables(g, keep));
  return out;
}

template <class D>
Ideal<D> by_iteration(const Ideal<D>& ideal, const IteratedDecomposition& dec, const GroebnerOptions& options) {
  Ideal<D> current = ideal;
  for (const auto& w : dec.steps) {
    if (all_zero(w)) continue;
    current = distortion_ideal_generators(current, DistortionVector(w), options);
  }
  Ideal<D> out(ideal.domain(), current.num_vars());
  for (const auto& g : current.generators()) out.add(g.remap(current.num_vars(), dec.permutation));
  return out;
}

}  // namespace

template <ExactDomain D>
Ideal<D> multi_distortion_generators(const Ideal<D>& ideal, const MultiParamConfig& cfg, MultiMethod method,
                                     const GroebnerOptions& options) {
  if (ideal.num_vars() != cfg.num_groups()) throw DimensionError("ideal ring does not match the configuration");
  if (method != MultiMethod::kElimination) {
    const auto dec = iterated_decomposition(cfg);
    if (dec) return by_iteration(ideal, *dec, options);
    if (method == MultiMethod::kIterated) {
      throw RangeError("configuration has no iterated decomposition");
    }
  }
  Ideal<D> gens = by_elimination(ideal, cfg, options);
  if (gens.is_homogeneous()) gens = minimalize_homogeneous(gens, options);
  return gens;
}

template <ExactDomain D>
std::int64_t multi_distortion_degree(const Ideal<D>& ideal, const MultiParamConfig& cfg, const GroebnerOptions& options) {
  if (ideal.num_vars() != cfg.num_groups()) throw DimensionError("ideal ring does not match the configuration");
  const auto dec = iterated_decomposition(cfg);
  if (!dec) throw RangeError("configuration has no iterated decomposition");
  std::vector<std::vector<int>> steps;
  for (const auto& w : dec->steps) {
    if (!all_zero(w)) steps.push_back(w);
  }
  if (steps.empty()) throw RangeError("configuration does not distort any coordinate");
  Ideal<D> current = ideal;
  for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
    current = distortion_ideal_generators(current, DistortionVector(steps[s]), options);
  }
  return distortion_degree(current, DistortionVector(steps.back()), options);
}

template Ideal<PrimeField> multi_distortion_generators(const Ideal<PrimeField>&, const MultiParamConfig&, MultiMethod,
                                                       const GroebnerOptions&);
template Ideal<RationalField> multi_distortion_generators(const Ideal<RationalField>&, const MultiParamConfig&,
                                                          MultiMethod, const GroebnerOptions&);
template std::int64_t multi_distortion_degree(const Ideal<PrimeField>&, const MultiParamConfig&,
                                              const GroebnerOptions&);
template std::int64_t multi_distortion_degree(const Ideal<RationalField>&, const MultiParamConfig&,
                                              const GroebnerOptions&);

}  // namespace distvar
