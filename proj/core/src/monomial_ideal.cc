#include "distvar/monomial_ideal.h"

#include <algorithm>
#include <map>

#include "distvar/errors.h"
#include "distvar/polynomial.h"

namespace distvar {
namespace {

using Poly = std::vector<std::int64_t>;

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Poly one_minus_t_pow(int d) {
  Poly r(static_cast<std::size_t>(d) + 1, 0);
  r[0] = 1;
  r[static_cast<std::size_t>(d)] -= 1;
  if (d == 0) r.clear();
  return r;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  std::uint32_t seen = 0;
  for (const auto& g : gens) {
    if (seen & g.support()) return false;
    seen |= g.support();
  }
  return true;
}

// Numerator of the Hilbert series of R/M, by pivoting on variable powers.
Poly numerator(const std::vector<Monomial>& gens, int num_vars) {
  if (gens.empty()) return {1};
  for (const auto& g : gens) {
    if (g.is_one()) return {};
  }
  if (pairwise_coprime(gens)) {
    Poly r{1};
    for (const auto& g : gens) r = poly_mul(r, one_minus_t_pow(g.degree()));
    return r;
  }
  // Pivot variable: the one occurring in the most generators.
  std::vector<int> count(static_cast<std::size_t>(num_vars), 0);
  for (const auto& g : gens) {
    for (int i = 0; i < num_vars; ++i) {
      if (g[i] > 0) ++count[static_cast<std::size_t>(i)];
    }
  }
  const int var = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  std::vector<int> exps;
  int pure_power = 0;
  for (const auto& g : gens) {
    if (g[var] > 0) exps.push_back(g[var]);
    if (g.degree() == g[var] && g[var] > 0) pure_power = g[var];
  }
  std::nth_element(exps.begin(), exps.begin() + static_cast<long>(exps.size() / 2), exps.end());
  // x^e must not lie in M, so M + x^e strictly grows.
  int e = exps[exps.size() / 2];
  if (pure_power > 0) e = std::min(e, pure_power - 1);
  e = std::max(e, 1);
  const Monomial pivot = Monomial::variable(num_vars, var, e);

  std::vector<Monomial> plus{pivot};
  for (const auto& g : gens) {
    if (!pivot.divides(g)) plus.push_back(g);
  }
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) colon.push_back(g / g.gcd(pivot));

  Poly shifted = numerator(minimalize(std::move(colon)), num_vars);
  shifted.insert(shifted.begin(), static_cast<std::size_t>(e), 0);
  if (std::all_of(shifted.begin(), shifted.end(), [](std::int64_t c) { return c == 0; })) shifted.clear();
  return poly_add(numerator(minimalize(std::move(plus)), num_vars), shifted);
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> out;
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : out) {
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  for (const auto& g : generators) {
    if (g.num_vars() != num_vars) throw DimensionError("monomial ideal generator from a different ring");
  }
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::saturate_variable(int j) const {
  if (j < 0 || j >= num_vars_) throw RangeError("saturate_variable: index out of range");
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (auto g : generators_) {
    g.set(j, 0);
    out.push_back(g);
  }
  return MonomialIdeal(num_vars_, std::move(out));
}

MonomialIdeal MonomialIdeal::quotient(const Monomial& m) const {
  std::vector<Monomial> out;
  out.reserve(generators_.size());
  for (const auto& g : generators_) out.push_back(g / g.gcd(m));
  return MonomialIdeal(num_vars_, std::move(out));
}

MonomialIdeal MonomialIdeal::sum(const Monomial& m) const {
  std::vector<Monomial> out = generators_;
  out.push_back(m);
  return MonomialIdeal(num_vars_, std::move(out));
}

HilbertData hilbert_dim_degree(const MonomialIdeal& m) {
  HilbertData h;
  h.numerator = numerator(m.generators(), m.num_vars());
  if (h.numerator.empty()) return h;
  // Divide out (1 - t) while t = 1 is a root.
  Poly q = h.numerator;
  int c = 0;
  auto value_at_one = [](const Poly& p) {
    std::int64_t s = 0;
    for (auto v : p) s += v;
    return s;
  };
  while (value_at_one(q) == 0) {
    // Synthetic division by (1 - t): q = (1 - t) * r, r_k = sum_{i<=k} q_i.
    Poly r(q.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < q.size(); ++k) {
      acc += q[k];
      r[k] = acc;
    }
    q = std::move(r);
    ++c;
  }
  h.projective_dimension = m.num_vars() - 1 - c;
  h.degree = value_at_one(q);
  return h;
}

std::vector<std::int64_t> hilbert_function(const HilbertData& h, int num_vars, int max_degree) {
  // Coefficients of 1/(1-t)^n are binomials C(k+n-1, n-1).
  std::vector<std::int64_t> series(static_cast<std::size_t>(max_degree) + 1, 0);
  std::vector<std::int64_t> inv(static_cast<std::size_t>(max_degree) + 1, 0);
  inv[0] = 1;
  for (int v = 0; v < num_vars; ++v) {
    for (int k = 1; k <= max_degree; ++k) inv[static_cast<std::size_t>(k)] += inv[static_cast<std::size_t>(k) - 1];
  }
  if (num_vars == 0) std::fill(inv.begin() + 1, inv.end(), 0);
  for (int k = 0; k <= max_degree; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < h.numerator.size() && static_cast<int>(i) <= k; ++i) {
      s += h.numerator[i] * inv[static_cast<std::size_t>(k) - i];
    }
    series[static_cast<std::size_t>(k)] = s;
  }
  return series;
}

std::string to_string(const MonomialIdeal& m, std::span<const std::string> names) {
  std::string out = "<";
  for (std::size_t i = 0; i < m.generators().size(); ++i) {
    if (i) out += ", ";
    out += format_monomial(m.generators()[i], names);
  }
  return out + ">";
}

}  // namespace distvar
