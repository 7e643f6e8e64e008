#include "distvar/groebner.h"

#include <algorithm>
#include <numeric>

namespace distvar {
namespace {

template <class D>
using Term = typename Polynomial<D>::Term;

// Terms sorted descending in the active order.
template <class D>
struct OrderedPoly {
  std::vector<Term<D>> terms;
  int sugar = 0;
};

template <class D>
class Engine {
 public:
  Engine(const D& domain, int num_vars, const TermOrder& order, const GroebnerOptions& options,
         GroebnerStats* stats)
      : domain_(domain), num_vars_(num_vars), order_(order), options_(options), stats_(stats) {}

  OrderedPoly<D> to_ordered(const Polynomial<D>& p) const {
    OrderedPoly<D> q;
    q.terms.assign(p.terms().begin(), p.terms().end());
    sort_terms(q.terms);
    q.sugar = std::max(0, p.total_degree());
    return q;
  }

  Polynomial<D> to_polynomial(const OrderedPoly<D>& q) const {
    return Polynomial<D>::from_terms(domain_, num_vars_, q.terms);
  }

  void sort_terms(std::vector<Term<D>>& terms) const {
    std::sort(terms.begin(), terms.end(),
              [&](const Term<D>& a, const Term<D>& b) { return order_.greater(a.monomial, b.monomial); });
  }

  void make_monic(OrderedPoly<D>& p) const {
    if (p.terms.empty()) return;
    const auto inv = domain_.inv(p.terms.front().coeff);
    for (auto& t : p.terms) t.coeff = domain_.mul(t.coeff, inv);
  }

  // a - c * m * b with b's terms shifted; both sorted in the active order.
  std::vector<Term<D>> sub_scaled(const std::vector<Term<D>>& a, std::size_t a_begin,
                                  const std::vector<Term<D>>& b, const Monomial& m,
                                  const typename D::Element& c) const {
    std::vector<Term<D>> out;
    out.reserve(a.size() - a_begin + b.size());
    std::size_t i = a_begin, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      const Monomial mb = b[j].monomial * m;
      if (i == a.size()) {
        out.push_back({mb, domain_.neg(domain_.mul(c, b[j].coeff))});
        ++j;
        continue;
      }
      switch (order_.compare(a[i].monomial, mb)) {
        case Ordering::kGreater:
          out.push_back(a[i++]);
          break;
        case Ordering::kLess:
          out.push_back({mb, domain_.neg(domain_.mul(c, b[j].coeff))});
          ++j;
          break;
        case Ordering::kEqual: {
          auto v = domain_.sub(a[i].coeff, domain_.mul(c, b[j].coeff));
          if (!domain_.is_zero(v)) out.push_back({a[i].monomial, v});
          ++i;
          ++j;
          break;
        }
      }
    }
    return out;
  }

  // Index of an active reducer whose leading monomial divides m, or -1.
  int find_reducer(const Monomial& m, int skip = -1) const {
    for (std::size_t k = 0; k < active_.size(); ++k) {
      const int idx = active_[k];
      if (idx == skip) continue;
      if (lead_[static_cast<std::size_t>(idx)].divides(m)) return idx;
    }
    return -1;
  }

  void count_step() {
    if (++reductions_ > options_.max_reductions) {
      throw BudgetError("Groebner computation exceeded " + std::to_string(options_.max_reductions) +
                        " reduction steps");
    }
    if (stats_) ++stats_->reduction_steps;
  }

  // Full reduction of p by the active basis, skipping element `skip`.
  OrderedPoly<D> reduce(OrderedPoly<D> p, int skip = -1) {
    std::vector<Term<D>> result;
    std::vector<Term<D>> work = std::move(p.terms);
    std::size_t begin = 0;
    while (begin < work.size()) {
      const Term<D>& lt = work[begin];
      const int r = find_reducer(lt.monomial, skip);
      if (r < 0) {
        result.push_back(lt);
        ++begin;
        continue;
      }
      count_step();
      const auto& g = polys_[static_cast<std::size_t>(r)];
      const Monomial q = lt.monomial / lead_[static_cast<std::size_t>(r)];
      p.sugar = std::max(p.sugar, g.sugar + q.degree());
      // g is monic, so the multiplier is the leading coefficient itself.
      const auto c = lt.coeff;
      work = sub_scaled(work, begin, g.terms, q, c);
      begin = 0;
    }
    p.terms = std::move(result);
    return p;
  }

  struct Pair {
    int i;
    int j;
    Monomial lcm;
    int sugar;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    switch (order_.compare(a.lcm, b.lcm)) {
      case Ordering::kLess:
        return true;
      case Ordering::kGreater:
        return false;
      case Ordering::kEqual:
        break;
    }
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  Pair make_pair(int i, int j) const {
    const auto& li = lead_[static_cast<std::size_t>(i)];
    const auto& lj = lead_[static_cast<std::size_t>(j)];
    Monomial l = li.lcm(lj);
    const int s = std::max(polys_[static_cast<std::size_t>(i)].sugar + l.degree() - li.degree(),
                           polys_[static_cast<std::size_t>(j)].sugar + l.degree() - lj.degree());
    return {i, j, l, s};
  }

  // Gebauer-Moeller update with the new element h (already stored).
  void update(int h) {
    const Monomial& lh = lead_[static_cast<std::size_t>(h)];
    std::vector<Pair> c;
    for (int g : active_) c.push_back(make_pair(g, h));

    // Keep (g,h) unless another candidate's lcm properly divides it;
    // coprime pairs are kept here and dropped after the filter.
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      const bool coprime = lead_[static_cast<std::size_t>(p.i)].coprime(lh);
      bool keep = coprime;
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m) {
          if (c[m].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t m = 0; m < d.size() && keep; ++m) {
          if (d[m].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> e;
    for (const auto& p : d) {
      if (!lead_[static_cast<std::size_t>(p.i)].coprime(lh)) e.push_back(p);
    }

    // Chain criterion on the old pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + e.size());
    for (const auto& p : pairs_) {
      const bool drop = lh.divides(p.lcm) &&
                        !(lead_[static_cast<std::size_t>(p.i)].lcm(lh) == p.lcm) &&
                        !(lead_[static_cast<std::size_t>(p.j)].lcm(lh) == p.lcm);
      if (!drop) kept.push_back(p);
    }
    for (auto& p : e) kept.push_back(p);
    pairs_ = std::move(kept);

    std::vector<int> next;
    for (int g : active_) {
      if (!lh.divides(lead_[static_cast<std::size_t>(g)])) next.push_back(g);
    }
    next.push_back(h);
    active_ = std::move(next);
  }

  int store(OrderedPoly<D> p) {
    make_monic(p);
    lead_.push_back(p.terms.front().monomial);
    polys_.push_back(std::move(p));
    return static_cast<int>(polys_.size()) - 1;
  }

  OrderedPoly<D> spoly(int i, int j, const Monomial& lcm) const {
    const auto& a = polys_[static_cast<std::size_t>(i)];
    const auto& b = polys_[static_cast<std::size_t>(j)];
    std::vector<Term<D>> ta;
    ta.reserve(a.terms.size());
    const Monomial qa = lcm / lead_[static_cast<std::size_t>(i)];
    for (const auto& t : a.terms) ta.push_back({t.monomial * qa, t.coeff});
    const Monomial qb = lcm / lead_[static_cast<std::size_t>(j)];
    OrderedPoly<D> s;
    s.terms = sub_scaled(ta, 0, b.terms, qb, domain_.one());
    s.sugar = std::max(a.sugar + qa.degree(), b.sugar + qb.degree());
    return s;
  }

  void run(const std::vector<Polynomial<D>>& generators) {
    // Sort inputs by leading monomial so the result does not depend on the
    // order they were given in.
    std::vector<OrderedPoly<D>> inputs;
    for (const auto& g : generators) {
      if (!g.is_zero()) inputs.push_back(to_ordered(g));
    }
    std::sort(inputs.begin(), inputs.end(), [&](const OrderedPoly<D>& a, const OrderedPoly<D>& b) {
      const Ordering o = order_.compare(a.terms.front().monomial, b.terms.front().monomial);
      if (o != Ordering::kEqual) return o == Ordering::kLess;
      return a.terms.size() < b.terms.size();
    });
    for (auto& g : inputs) {
      OrderedPoly<D> r = reduce(std::move(g));
      if (r.terms.empty()) continue;
      update(store(std::move(r)));
    }
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it) {
        if (pair_less(*it, *best)) best = it;
      }
      const Pair p = *best;
      pairs_.erase(best);
      if (++processed > options_.max_pairs) {
        throw BudgetError("Groebner computation exceeded " + std::to_string(options_.max_pairs) + " pairs");
      }
      if (stats_) ++stats_->pairs_reduced;
      OrderedPoly<D> h = reduce(spoly(p.i, p.j, p.lcm));
      if (h.terms.empty()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      update(store(std::move(h)));
    }
  }

  GroebnerBasis<D> reduced_basis() {
    // Active leading monomials are pairwise non-dividing after update().
    std::vector<int> idx = active_;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return order_.compare(lead_[static_cast<std::size_t>(a)], lead_[static_cast<std::size_t>(b)]) ==
             Ordering::kLess;
    });
    GroebnerBasis<D> gb;
    gb.order = order_;
    gb.num_vars = num_vars_;
    gb.reduced = true;
    for (int i : idx) {
      OrderedPoly<D> p = polys_[static_cast<std::size_t>(i)];
      Term<D> lt = p.terms.front();
      OrderedPoly<D> tail;
      tail.terms.assign(p.terms.begin() + 1, p.terms.end());
      tail = reduce(std::move(tail), i);
      tail.terms.insert(tail.terms.begin(), lt);
      make_monic(tail);
      polys_[static_cast<std::size_t>(i)].terms = tail.terms;
      gb.elements.push_back(to_polynomial(tail));
      gb.leading_monomials.push_back(lt.monomial);
    }
    return gb;
  }

  // Reduction by an existing basis.
  void load(const GroebnerBasis<D>& gb) {
    for (const auto& e : gb.elements) {
      OrderedPoly<D> p = to_ordered(e);
      if (p.terms.empty()) continue;
      active_.push_back(store(std::move(p)));
    }
  }

 private:
  const D& domain_;
  int num_vars_;
  TermOrder order_;
  GroebnerOptions options_;
  GroebnerStats* stats_;
  std::size_t reductions_ = 0;

  std::vector<OrderedPoly<D>> polys_;
  std::vector<Monomial> lead_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
};

template <class D>
void check_order(const Ideal<D>& ideal, const TermOrder& order) {
  if (!order.is_well_founded() && !ideal.is_homogeneous()) {
    throw RangeError("a weighted order with negative weights needs homogeneous generators");
  }
  if (order.kind() == TermOrder::Kind::kWeighted &&
      static_cast<int>(order.weights().size()) != ideal.num_vars()) {
    throw DimensionError("weight vector does not match the ring");
  }
}

}  // namespace

template <ExactDomain D>
Polynomial<D> normal_form(const Polynomial<D>& f, const GroebnerBasis<D>& g) {
  if (f.num_vars() != g.num_vars && !g.elements.empty()) throw DimensionError("normal_form: ring mismatch");
  Engine<D> engine(f.domain(), f.num_vars(), g.order, GroebnerOptions{}, nullptr);
  engine.load(g);
  return engine.to_polynomial(engine.reduce(engine.to_ordered(f)));
}

template <ExactDomain D>
Polynomial<D> s_polynomial(const Polynomial<D>& f, const Polynomial<D>& g, const TermOrder& order) {
  const auto& lf = leading_term(f, order);
  const auto& lg = leading_term(g, order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const D& d = f.domain();
  return f.shifted(l / lf.monomial).scaled(d.inv(lf.coeff)) - g.shifted(l / lg.monomial).scaled(d.inv(lg.coeff));
}

template <ExactDomain D>
GroebnerBasis<D> buchberger(const Ideal<D>& ideal, const TermOrder& order, const GroebnerOptions& options,
                            GroebnerStats* stats) {
  check_order(ideal, order);
  Engine<D> engine(ideal.domain(), ideal.num_vars(), order, options, stats);
  engine.run(ideal.generators());
  return engine.reduced_basis();
}

template <ExactDomain D>
bool is_groebner_basis(const GroebnerBasis<D>& g) {
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (std::size_t j = i + 1; j < g.elements.size(); ++j) {
      if (g.leading_monomials[i].coprime(g.leading_monomials[j])) continue;
      if (!normal_form(s_polynomial(g.elements[i], g.elements[j], g.order), g).is_zero()) return false;
    }
  }
  return true;
}

template <ExactDomain D>
MonomialIdeal initial_ideal(const Ideal<D>& ideal, const TermOrder& order, const GroebnerOptions& options) {
  const auto gb = buchberger(ideal, order, options);
  return MonomialIdeal(ideal.num_vars(), gb.leading_monomials);
}

template <ExactDomain D>
MonomialIdeal initial_ideal(const Ideal<D>& ideal, std::span<const int> u, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw RangeError("initial_ideal: generators must be homogeneous");
  if (static_cast<int>(u.size()) != ideal.num_vars()) throw DimensionError("initial_ideal: weight size");
  return initial_ideal(ideal, TermOrder::refining_negative(std::vector<int>(u.begin(), u.end())), options);
}

template <ExactDomain D>
Ideal<D> eliminate(const Ideal<D>& ideal, std::span<const int> drop_vars, const GroebnerOptions& options) {
  const int n = ideal.num_vars();
  std::vector<bool> dropped(static_cast<std::size_t>(n), false);
  for (int v : drop_vars) {
    if (v < 0 || v >= n) throw RangeError("eliminate: variable index out of range");
    dropped[static_cast<std::size_t>(v)] = true;
  }
  // Dropped variables first, then the rest, each in original order.
  std::vector<int> perm;
  for (int i = 0; i < n; ++i) {
    if (dropped[static_cast<std::size_t>(i)]) perm.push_back(i);
  }
  const int k = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    if (!dropped[static_cast<std::size_t>(i)]) perm.push_back(i);
  }
  std::vector<int> forward(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) forward[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = p;

  Ideal<D> moved(ideal.domain(), n);
  for (const auto& g : ideal.generators()) moved.add(g.remap(n, forward));
  const auto gb = buchberger(moved, k == 0 ? TermOrder::grevlex() : TermOrder::block(k), options);

  Ideal<D> out(ideal.domain(), n);
  for (std::size_t e = 0; e < gb.elements.size(); ++e) {
    bool free = true;
    for (int v = 0; v < k && free; ++v) {
      if (gb.elements[e].num_vars() > 0 && (gb.leading_monomials[e].support() >> v & 1u)) free = false;
    }
    if (!free) continue;
    // Block order: a leading monomial free of the block means the whole
    // element is.
    out.add(gb.elements[e].remap(n, perm));
  }
  return out;
}

template <ExactDomain D>
Ideal<D> saturate(const Ideal<D>& ideal, const Polynomial<D>& f, const GroebnerOptions& options) {
  const int n = ideal.num_vars();
  if (n + 1 > kMaxVariables) throw DimensionError("saturate: no room for the extra variable");
  std::vector<int> shift(static_cast<std::size_t>(n));
  std::iota(shift.begin(), shift.end(), 1);
  const D& d = ideal.domain();
  Ideal<D> big(d, n + 1);
  for (const auto& g : ideal.generators()) big.add(g.remap(n + 1, shift));
  const auto t = Polynomial<D>::variable(d, n + 1, 0);
  big.add(f.remap(n + 1, shift) * t - Polynomial<D>::constant(d, n + 1, d.one()));
  const int drop[] = {0};
  const Ideal<D> elim = eliminate(big, drop, options);
  std::vector<int> keep(static_cast<std::size_t>(n));
  std::iota(keep.begin(), keep.end(), 1);
  Ideal<D> out(d, n);
  for (const auto& g : elim.generators()) out.add(drop_variables(g, keep));
  return out;
}

template <ExactDomain D>
bool contains(const Ideal<D>& ideal, const Polynomial<D>& f, const GroebnerOptions& options) {
  const auto gb = buchberger(ideal, TermOrder::grevlex(), options);
  return normal_form(f, gb).is_zero();
}

template <ExactDomain D>
bool same_ideal(const Ideal<D>& a, const Ideal<D>& b, const GroebnerOptions& options) {
  if (a.num_vars() != b.num_vars()) return false;
  const auto ga = buchberger(a, TermOrder::grevlex(), options);
  const auto gb = buchberger(b, TermOrder::grevlex(), options);
  return ga.elements == gb.elements;
}

template <ExactDomain D>
Ideal<D> minimalize_homogeneous(const Ideal<D>& ideal, const GroebnerOptions& options) {
  if (!ideal.is_homogeneous()) throw RangeError("minimalize_homogeneous: generators must be homogeneous");
  std::vector<Polynomial<D>> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(),
                   [](const Polynomial<D>& a, const Polynomial<D>& b) { return a.total_degree() < b.total_degree(); });
  Ideal<D> kept(ideal.domain(), ideal.num_vars());
  GroebnerBasis<D> gb;
  gb.order = TermOrder::grevlex();
  gb.num_vars = ideal.num_vars();
  for (const auto& g : gens) {
    if (!gb.elements.empty() && normal_form(g, gb).is_zero()) continue;
    kept.add(g);
    gb = buchberger(kept, TermOrder::grevlex(), options);
  }
  return kept;
}

template <ExactDomain D>
HilbertData hilbert_data(const Ideal<D>& ideal, const GroebnerOptions& options) {
  return hilbert_dim_degree(initial_ideal(ideal, TermOrder::grevlex(), options));
}

#define DISTVAR_GROEBNER_INSTANTIATE(D)                                                                     \
  template Polynomial<D> normal_form(const Polynomial<D>&, const GroebnerBasis<D>&);                        \
  template Polynomial<D> s_polynomial(const Polynomial<D>&, const Polynomial<D>&, const TermOrder&);        \
  template GroebnerBasis<D> buchberger(const Ideal<D>&, const TermOrder&, const GroebnerOptions&,           \
                                       GroebnerStats*);                                                     \
  template bool is_groebner_basis(const GroebnerBasis<D>&);                                                 \
  template MonomialIdeal initial_ideal(const Ideal<D>&, std::span<const int>, const GroebnerOptions&);      \
  template MonomialIdeal initial_ideal(const Ideal<D>&, const TermOrder&, const GroebnerOptions&);          \
  template Ideal<D> eliminate(const Ideal<D>&, std::span<const int>, const GroebnerOptions&);               \
  template Ideal<D> saturate(const Ideal<D>&, const Polynomial<D>&, const GroebnerOptions&);                \
  template bool contains(const Ideal<D>&, const Polynomial<D>&, const GroebnerOptions&);                    \
  template bool same_ideal(const Ideal<D>&, const Ideal<D>&, const GroebnerOptions&);                       \
  template Ideal<D> minimalize_homogeneous(const Ideal<D>&, const GroebnerOptions&);                        \
  template HilbertData hilbert_data(const Ideal<D>&, const GroebnerOptions&);

DISTVAR_GROEBNER_INSTANTIATE(PrimeField)
DISTVAR_GROEBNER_INSTANTIATE(RationalField)

}  // namespace distvar
