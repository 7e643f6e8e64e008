#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "distvar/domain.h"
#include "distvar/monomial_ideal.h"
#include "distvar/polynomial.h"
#include "distvar/term_order.h"

namespace distvar {

// Finitely generated ideal; generators share one ring and domain.
template <CoefficientDomain D>
class Ideal {
 public:
  Ideal() = default;
  Ideal(D domain, int num_vars, std::vector<Polynomial<D>> generators = {})
      : domain_(std::move(domain)), num_vars_(num_vars) {
    for (auto& g : generators) add(std::move(g));
  }

  // Zero polynomials are dropped.
  void add(Polynomial<D> p) {
    if (p.num_vars() != num_vars_) throw DimensionError("ideal generator from a different ring");
    if (!p.is_zero()) generators_.push_back(std::move(p));
  }

  const D& domain() const { return domain_; }
  int num_vars() const { return num_vars_; }
  const std::vector<Polynomial<D>>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_homogeneous() const {
    for (const auto& g : generators_) {
      if (!g.is_homogeneous()) return false;
    }
    return true;
  }

 private:
  D domain_{};
  int num_vars_ = 0;
  std::vector<Polynomial<D>> generators_;
};

template <ExactDomain D>
struct GroebnerBasis {
  TermOrder order;
  int num_vars = 0;
  // Sorted by ascending leading monomial; monic when reduced.
  std::vector<Polynomial<D>> elements;
  std::vector<Monomial> leading_monomials;
  bool reduced = false;
};

// Work limits. Exceeding either raises BudgetError.
struct GroebnerOptions {
  std::size_t max_pairs = 5'000'000;
  std::size_t max_reductions = 200'000'000;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;
};

// Full reduction of f modulo g (tail included).
template <ExactDomain D>
Polynomial<D> normal_form(const Polynomial<D>& f, const GroebnerBasis<D>& g);

template <ExactDomain D>
Polynomial<D> s_polynomial(const Polynomial<D>& f, const Polynomial<D>& g, const TermOrder& order);

// Reduced Groebner basis. A weighted order with a negative weight is only
// accepted for homogeneous input.
template <ExactDomain D>
GroebnerBasis<D> buchberger(const Ideal<D>& ideal, const TermOrder& order,
                            const GroebnerOptions& options = {}, GroebnerStats* stats = nullptr);

// True iff every S-polynomial of two elements reduces to zero.
template <ExactDomain D>
bool is_groebner_basis(const GroebnerBasis<D>& g);

// Leading monomials of the reduced basis for weight -u refined by grevlex.
// Requires homogeneous generators.
template <ExactDomain D>
MonomialIdeal initial_ideal(const Ideal<D>& ideal, std::span<const int> u, const GroebnerOptions& options = {});

// Leading monomials for an arbitrary order.
template <ExactDomain D>
MonomialIdeal initial_ideal(const Ideal<D>& ideal, const TermOrder& order, const GroebnerOptions& options = {});

// I intersected with the subring free of drop_vars, in the same ring.
template <ExactDomain D>
Ideal<D> eliminate(const Ideal<D>& ideal, std::span<const int> drop_vars, const GroebnerOptions& options = {});

// I : f^infinity, through the extra variable t and f*t - 1.
template <ExactDomain D>
Ideal<D> saturate(const Ideal<D>& ideal, const Polynomial<D>& f, const GroebnerOptions& options = {});

// Ideal membership via a grevlex basis.
template <ExactDomain D>
bool contains(const Ideal<D>& ideal, const Polynomial<D>& f, const GroebnerOptions& options = {});

// Equality of ideals through reduced grevlex bases.
template <ExactDomain D>
bool same_ideal(const Ideal<D>& a, const Ideal<D>& b, const GroebnerOptions& options = {});

// Homogeneous ideals only: a minimal generating set chosen greedily in
// order of degree from the given generators.
template <ExactDomain D>
Ideal<D> minimalize_homogeneous(const Ideal<D>& ideal, const GroebnerOptions& options = {});

// Moves polynomials in which only keep_vars occur into the ring on
// keep_vars (in the given order). Throws RangeError if another variable
// occurs.
template <CoefficientDomain D>
Polynomial<D> drop_variables(const Polynomial<D>& p, std::span<const int> keep_vars) {
  std::vector<int> mapping(static_cast<std::size_t>(p.num_vars()), -1);
  for (std::size_t k = 0; k < keep_vars.size(); ++k) mapping[static_cast<std::size_t>(keep_vars[k])] = static_cast<int>(k);
  for (const auto& t : p.terms()) {
    for (int i = 0; i < p.num_vars(); ++i) {
      if (t.monomial[i] > 0 && mapping[static_cast<std::size_t>(i)] < 0) {
        throw RangeError("drop_variables: a dropped variable occurs");
      }
    }
  }
  for (auto& m : mapping) {
    if (m < 0) m = 0;
  }
  return p.remap(static_cast<int>(keep_vars.size()), mapping);
}

// Hilbert data of the ideal's initial ideal under grevlex.
template <ExactDomain D>
HilbertData hilbert_data(const Ideal<D>& ideal, const GroebnerOptions& options = {});

#define DISTVAR_GROEBNER_EXTERN(D)                                                                   \
  extern template Polynomial<D> normal_form(const Polynomial<D>&, const GroebnerBasis<D>&);          \
  extern template Polynomial<D> s_polynomial(const Polynomial<D>&, const Polynomial<D>&,             \
                                             const TermOrder&);                                      \
  extern template GroebnerBasis<D> buchberger(const Ideal<D>&, const TermOrder&,                     \
                                              const GroebnerOptions&, GroebnerStats*);               \
  extern template bool is_groebner_basis(const GroebnerBasis<D>&);                                   \
  extern template MonomialIdeal initial_ideal(const Ideal<D>&, std::span<const int>,                 \
                                              const GroebnerOptions&);                               \
  extern template MonomialIdeal initial_ideal(const Ideal<D>&, const TermOrder&,                     \
                                              const GroebnerOptions&);                               \
  extern template Ideal<D> eliminate(const Ideal<D>&, std::span<const int>, const GroebnerOptions&); \
  extern template Ideal<D> saturate(const Ideal<D>&, const Polynomial<D>&, const GroebnerOptions&);  \
  extern template bool contains(const Ideal<D>&, const Polynomial<D>&, const GroebnerOptions&);      \
  extern template bool same_ideal(const Ideal<D>&, const Ideal<D>&, const GroebnerOptions&);         \
  extern template Ideal<D> minimalize_homogeneous(const Ideal<D>&, const GroebnerOptions&);          \
  extern template HilbertData hilbert_data(const Ideal<D>&, const GroebnerOptions&);

DISTVAR_GROEBNER_EXTERN(PrimeField)
DISTVAR_GROEBNER_EXTERN(RationalField)

#undef DISTVAR_GROEBNER_EXTERN

}  // namespace distvar
