#include "distvar/elimination_template.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <json.hpp>

#include "distvar/errors.h"
#include "distvar/gamma_poly.h"

namespace distvar {
namespace gamma_ring {
namespace {

constexpr int kBase = kMaxDegree + 1;

int pack(const Exponents& e) { return ((e[0] * kBase + e[1]) * kBase + e[2]) * kBase + e[3]; }

struct Tables {
  std::array<Exponents, kNumMonomials> monomials{};
  std::array<int, kBase * kBase * kBase * kBase> index{};
  std::array<std::array<std::int16_t, kNumMonomials>, kNumMonomials> product{};

  Tables() {
    std::vector<Monomial> all;
    for (int a = 0; a <= kMaxDegree; ++a) {
      for (int b = 0; a + b <= kMaxDegree; ++b) {
        for (int c = 0; a + b + c <= kMaxDegree; ++c) {
          for (int d = 0; a + b + c + d <= kMaxDegree; ++d) all.push_back(Monomial{a, b, c, d});
        }
      }
    }
    const TermOrder order = TermOrder::grevlex();
    std::sort(all.begin(), all.end(), [&](const Monomial& x, const Monomial& y) { return order.greater(x, y); });
    index.fill(-1);
    for (int i = 0; i < kNumMonomials; ++i) {
      for (int v = 0; v < kVars; ++v) {
        monomials[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(all[static_cast<std::size_t>(i)][v]);
      }
      index[static_cast<std::size_t>(pack(monomials[static_cast<std::size_t>(i)]))] = i;
    }
    for (int i = 0; i < kNumMonomials; ++i) {
      for (int j = 0; j < kNumMonomials; ++j) {
        Exponents e{};
        int deg = 0;
        for (std::size_t v = 0; v < kVars; ++v) {
          e[v] = static_cast<std::uint8_t>(monomials[static_cast<std::size_t>(i)][v] + monomials[static_cast<std::size_t>(j)][v]);
          deg += e[v];
        }
        product[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<std::int16_t>(deg > kMaxDegree ? -1 : index[static_cast<std::size_t>(pack(e))]);
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::array<Exponents, kNumMonomials>& monomials() { return tables().monomials; }

int degree(int index) {
  const auto& e = tables().monomials[static_cast<std::size_t>(index)];
  return e[0] + e[1] + e[2] + e[3];
}

int index_of(const Exponents& e) {
  if (e[0] + e[1] + e[2] + e[3] > kMaxDegree) return -1;
  return tables().index[static_cast<std::size_t>(pack(e))];
}

int product(int a, int b) { return tables().product[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

Monomial to_monomial(int index) {
  const auto& e = tables().monomials[static_cast<std::size_t>(index)];
  return Monomial{e[0], e[1], e[2], e[3]};
}

int from_monomial(const Monomial& m) {
  if (m.num_vars() != kVars) throw DimensionError("gamma monomials have four variables");
  if (m.degree() > kMaxDegree) return -1;
  return index_of({static_cast<std::uint8_t>(m[0]), static_cast<std::uint8_t>(m[1]), static_cast<std::uint8_t>(m[2]),
                   static_cast<std::uint8_t>(m[3])});
}

}  // namespace gamma_ring

namespace {

using Row = std::vector<std::uint32_t>;

}  // namespace

std::array<GammaPolynomial<PrimeField>, 10> random_instance_generators(const PrimeField& fp, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(fp.modulus() - 1));
  for (;;) {
    // Seven random correspondences mod p, reduced to row echelon form.
    std::vector<Row> c(7, Row(12));
    for (auto& row : c) {
      const auto u1 = dist(rng), v1 = dist(rng), u2 = dist(rng), v2 = dist(rng);
      const auto r = fp.add(fp.mul(u1, u1), fp.mul(v1, v1));
      row = {fp.mul(u2, u1), fp.mul(u2, v1), u2, fp.mul(u2, r), fp.mul(v2, u1), fp.mul(v2, v1), v2, fp.mul(v2, r),
             u1, v1, 1, r};
    }
    std::vector<int> pivots;
    int rank = 0;
    for (int col = 0; col < 12 && rank < 7; ++col) {
      int p = rank;
      while (p < 7 && c[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] == 0) ++p;
      if (p == 7) continue;
      std::swap(c[static_cast<std::size_t>(p)], c[static_cast<std::size_t>(rank)]);
      auto& prow = c[static_cast<std::size_t>(rank)];
      const auto inv = fp.inv(prow[static_cast<std::size_t>(col)]);
      for (auto& x : prow) x = fp.mul(x, inv);
      for (int r2 = 0; r2 < 7; ++r2) {
        if (r2 == rank) continue;
        auto& row = c[static_cast<std::size_t>(r2)];
        const auto f = row[static_cast<std::size_t>(col)];
        if (f == 0) continue;
        for (int k = 0; k < 12; ++k) row[static_cast<std::size_t>(k)] = fp.sub(row[static_cast<std::size_t>(k)], fp.mul(f, prow[static_cast<std::size_t>(k)]));
      }
      pivots.push_back(col);
      ++rank;
    }
    if (rank < 7) continue;
    std::vector<Row> kernel;
    for (int free = 0; free < 12; ++free) {
      if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
      Row v(12, 0);
      v[static_cast<std::size_t>(free)] = 1;
      for (int i = 0; i < 7; ++i) v[static_cast<std::size_t>(pivots[static_cast<std::size_t>(i)])] = fp.neg(c[static_cast<std::size_t>(i)][static_cast<std::size_t>(free)]);
      kernel.push_back(std::move(v));
    }
    const auto last = std::find_if(kernel.begin(), kernel.end(), [](const Row& v) { return v[10] != 0; });
    if (last == kernel.end()) continue;
    std::iter_swap(last, kernel.end() - 1);
    // A random basis of the kernel puts gamma in generic coordinates.
    std::array<Row, 5> mixed;
    for (auto& v : mixed) {
      v.assign(12, 0);
      for (const auto& k : kernel) {
        const auto w = dist(rng);
        for (std::size_t i = 0; i < 12; ++i) v[i] = fp.add(v[i], fp.mul(w, k[i]));
      }
    }
    std::array<GammaPolynomial<PrimeField>, 12> m;
    for (std::size_t k = 0; k < 12; ++k) {
      m[k] = GammaPolynomial<PrimeField>::affine(fp, {mixed[0][k], mixed[1][k], mixed[2][k], mixed[3][k], mixed[4][k]});
    }
    return gamma_generators(m);
  }
}

namespace {

std::vector<Row> fill_matrix(const EliminationTemplate& tmpl, const std::array<GammaPolynomial<PrimeField>, 10>& gens) {
  std::array<int, gamma_ring::kNumMonomials> position{};
  for (std::size_t c = 0; c < tmpl.columns.size(); ++c) position[static_cast<std::size_t>(tmpl.columns[c])] = static_cast<int>(c);
  std::vector<Row> a;
  a.reserve(tmpl.rows.size());
  for (const auto& r : tmpl.rows) {
    Row row(EliminationTemplate::kNumColumns, 0);
    const auto& g = gens[static_cast<std::size_t>(r.generator)];
    for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
      if (g[i] == 0) continue;
      const int target = gamma_ring::product(i, r.multiplier);
      if (target < 0) throw ConstructionError("template row exceeds degree 5");
      row[static_cast<std::size_t>(position[static_cast<std::size_t>(target)])] = g[i];
    }
    a.push_back(std::move(row));
  }
  return a;
}

// Row echelon form in column order; returns the pivot columns.
std::vector<int> echelon_pivots(const PrimeField& fp, std::vector<Row> a) {
  std::vector<int> pivots;
  std::size_t rank = 0;
  for (int col = 0; col < EliminationTemplate::kNumColumns && rank < a.size(); ++col) {
    const auto c = static_cast<std::size_t>(col);
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const auto inv = fp.inv(a[rank][c]);
    for (std::size_t k = c; k < a[rank].size(); ++k) a[rank][k] = fp.mul(a[rank][k], inv);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      const auto f = a[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] = fp.sub(a[r][k], fp.mul(f, a[rank][k]));
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

// Rows of the schedule that are independent of the earlier ones.
std::vector<TemplateRow> independent_rows(const PrimeField& fp, const EliminationTemplate& tmpl,
                                          const std::vector<Row>& a) {
  std::vector<std::pair<int, Row>> basis;  // (pivot column, row normalized at pivot)
  std::vector<TemplateRow> kept;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Row row = a[i];
    for (const auto& [pc, b] : basis) {
      const auto f = row[static_cast<std::size_t>(pc)];
      if (f == 0) continue;
      for (std::size_t k = static_cast<std::size_t>(pc); k < row.size(); ++k) row[k] = fp.sub(row[k], fp.mul(f, b[k]));
    }
    const auto lead = std::find_if(row.begin(), row.end(), [](std::uint32_t x) { return x != 0; });
    if (lead == row.end()) continue;
    const int pc = static_cast<int>(lead - row.begin());
    const auto inv = fp.inv(*lead);
    for (auto& x : row) x = fp.mul(x, inv);
    const auto at = std::find_if(basis.begin(), basis.end(), [&](const auto& e) { return e.first > pc; });
    basis.insert(at, {pc, std::move(row)});
    kept.push_back(tmpl.rows[i]);
  }
  return kept;
}

}  // namespace

const std::array<int, EliminationTemplate::kBasisSize>& standard_basis() {
  static const std::array<int, EliminationTemplate::kBasisSize> basis = [] {
    constexpr std::array<gamma_ring::Exponents, EliminationTemplate::kBasisSize> listed{{
        {0, 0, 0, 0}, {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 0, 0, 1}, {1, 0, 0, 2},
        {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 1}, {0, 1, 0, 1}, {0, 1, 0, 2}, {0, 1, 0, 3},
        {0, 0, 1, 0}, {0, 0, 2, 0}, {0, 0, 3, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}, {0, 0, 1, 2},
        {0, 0, 1, 3}, {0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 0, 4},
    }};
    std::array<int, EliminationTemplate::kBasisSize> out{};
    for (std::size_t i = 0; i < listed.size(); ++i) out[i] = gamma_ring::index_of(listed[i]);
    return out;
  }();
  return basis;
}

void validate_template(const EliminationTemplate& tmpl, std::uint32_t prime, std::uint64_t seed) {
  const PrimeField fp(prime);
  std::mt19937_64 rng(seed);
  const auto pivots = echelon_pivots(fp, fill_matrix(tmpl, random_instance_generators(fp, rng)));
  std::vector<int> expected(EliminationTemplate::kNumReducible);
  std::iota(expected.begin(), expected.end(), 0);
  if (pivots != expected) {
    throw ConstructionError("elimination template has rank " + std::to_string(pivots.size()) +
                            " or pivots outside the non-basis columns");
  }
}

EliminationTemplate build_template(const TemplateOptions& options) {
  if (options.action_variable < 0 || options.action_variable >= gamma_ring::kVars) {
    throw RangeError("action variable must be one of gamma_1..gamma_4");
  }
  EliminationTemplate tmpl;
  tmpl.action_variable = options.action_variable;
  for (int g = 0; g < 10; ++g) {
    const int max_mult = gamma_ring::kMaxDegree - kGeneratorDegrees[static_cast<std::size_t>(g)];
    for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
      if (gamma_ring::degree(i) <= max_mult) tmpl.rows.push_back({g, i});
    }
  }
  const auto& basis = standard_basis();
  for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
    if (std::find(basis.begin(), basis.end(), i) == basis.end()) tmpl.columns.push_back(i);
  }
  tmpl.columns.insert(tmpl.columns.end(), basis.begin(), basis.end());
  if (options.prune) {
    const PrimeField fp(options.prime);
    std::mt19937_64 rng(options.seed);
    tmpl.rows = independent_rows(fp, tmpl, fill_matrix(tmpl, random_instance_generators(fp, rng)));
  }
  validate_template(tmpl, options.prime, options.seed + 1);
  return tmpl;
}

std::string EliminationTemplate::to_json() const {
  nlohmann::json j;
  j["format"] = "distvar-elimination-template";
  j["version"] = version;
  j["action_variable"] = action_variable + 1;
  auto exps = [](int index) {
    const auto& e = gamma_ring::monomials()[static_cast<std::size_t>(index)];
    return std::vector<int>(e.begin(), e.end());
  };
  j["rows"] = nlohmann::json::array();
  for (const auto& r : rows) j["rows"].push_back({{"generator", r.generator + 1}, {"multiplier", exps(r.multiplier)}});
  j["columns"] = nlohmann::json::array();
  for (int c : columns) j["columns"].push_back(exps(c));
  std::vector<int> basis_indices(kBasisSize);
  std::iota(basis_indices.begin(), basis_indices.end(), kNumReducible);
  j["basis"] = basis_indices;
  return j.dump();
}

EliminationTemplate EliminationTemplate::from_json(std::string_view text) {
  EliminationTemplate t;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.at("format").get<std::string>() != "distvar-elimination-template") throw ParseError("not an elimination template");
    t.version = j.at("version").get<int>();
    if (t.version != kVersion) throw ParseError("unsupported template version " + std::to_string(t.version));
    t.action_variable = j.at("action_variable").get<int>() - 1;
    if (t.action_variable < 0 || t.action_variable >= gamma_ring::kVars) throw ParseError("action variable out of range");
    auto index = [](const nlohmann::json& e) {
      const auto v = e.get<std::vector<int>>();
      if (v.size() != gamma_ring::kVars || std::any_of(v.begin(), v.end(), [](int x) { return x < 0 || x > gamma_ring::kMaxDegree; })) {
        throw ParseError("bad gamma exponent vector");
      }
      const int i = gamma_ring::index_of({static_cast<std::uint8_t>(v[0]), static_cast<std::uint8_t>(v[1]),
                                          static_cast<std::uint8_t>(v[2]), static_cast<std::uint8_t>(v[3])});
      if (i < 0) throw ParseError("gamma monomial of degree above 5");
      return i;
    };
    for (const auto& r : j.at("rows")) {
      const int g = r.at("generator").get<int>() - 1;
      if (g < 0 || g >= 10) throw ParseError("generator index out of range");
      const int mult = index(r.at("multiplier"));
      if (gamma_ring::degree(mult) + kGeneratorDegrees[static_cast<std::size_t>(g)] > gamma_ring::kMaxDegree) {
        throw ParseError("template row exceeds degree 5");
      }
      t.rows.push_back({g, mult});
    }
    for (const auto& c : j.at("columns")) t.columns.push_back(index(c));
    std::vector<int> sorted = t.columns;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all(gamma_ring::kNumMonomials);
    std::iota(all.begin(), all.end(), 0);
    if (sorted != all) throw ParseError("template columns are not the 126 monomials of degree at most 5");
    const auto& basis = standard_basis();
    if (!std::equal(basis.begin(), basis.end(), t.columns.begin() + kNumReducible)) {
      throw ParseError("template basis differs from the standard monomial basis");
    }
    std::vector<int> expected(kBasisSize);
    std::iota(expected.begin(), expected.end(), kNumReducible);
    if (j.at("basis").get<std::vector<int>>() != expected) throw ParseError("template basis indices are inconsistent");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("template JSON: ") + e.what());
  }
  return t;
}

}  // namespace distvar
