#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distvar/domain.h"
#include "distvar/errors.h"
#include "distvar/monomial.h"
#include "distvar/term_order.h"

namespace distvar {

// Sparse polynomial over a coefficient domain. Terms are kept in descending
// grevlex order with no zero coefficients and no repeated monomials, so two
// equal polynomials have identical term lists.
template <CoefficientDomain D>
class Polynomial {
 public:
  using Domain = D;
  using Element = typename D::Element;

  struct Term {
    Monomial monomial;
    Element coeff;
  };

  Polynomial() = default;
  Polynomial(D domain, int num_vars) : domain_(std::move(domain)), num_vars_(num_vars) {
    if (num_vars < 0 || num_vars > kMaxVariables) {
      throw DimensionError("polynomial ring size out of range");
    }
  }

  static Polynomial constant(const D& domain, int num_vars, const Element& c) {
    Polynomial p(domain, num_vars);
    if (!domain.is_zero(c)) p.terms_.push_back({Monomial(num_vars), c});
    return p;
  }
  static Polynomial term(const D& domain, const Monomial& m, const Element& c) {
    Polynomial p(domain, m.num_vars());
    if (!domain.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  static Polynomial variable(const D& domain, int num_vars, int index) {
    return term(domain, Monomial::variable(num_vars, index), domain.one());
  }
  // Builds from arbitrary (monomial, coefficient) pairs; combines duplicates.
  static Polynomial from_terms(const D& domain, int num_vars, std::vector<Term> terms) {
    Polynomial p(domain, num_vars);
    for (const auto& t : terms) {
      if (t.monomial.num_vars() != num_vars) throw DimensionError("term from a different ring");
    }
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const D& domain() const { return domain_; }
  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }
  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return t.monomial.degree() == terms_.front().monomial.degree();
    });
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

  Element coefficient(const Monomial& m) const {
    auto it = find(m);
    return it == terms_.end() ? domain_.zero() : it->coeff;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = domain_.neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(domain_, num_vars_);
    if (is_zero() || o.is_zero()) return r;
    r.terms_.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        r.terms_.push_back({a.monomial * b.monomial, domain_.mul(a.coeff, b.coeff)});
      }
    }
    r.normalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Element& c) const {
    Polynomial r(domain_, num_vars_);
    if (domain_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Element v = domain_.mul(t.coeff, c);
      if (!domain_.is_zero(v)) r.terms_.push_back({t.monomial, v});
    }
    return r;
  }
  // Multiplication by a monomial preserves the grevlex order of terms.
  Polynomial shifted(const Monomial& m) const {
    if (m.num_vars() != num_vars_) throw DimensionError("monomial from a different ring");
    Polynomial r = *this;
    for (auto& t : r.terms_) t.monomial = t.monomial * m;
    return r;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw RangeError("negative polynomial power");
    Polynomial r = constant(domain_, num_vars_, domain_.one());
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k > 0) base = base * base;
    }
    return r;
  }

  Element evaluate(std::span<const Element> point) const {
    if (static_cast<int>(point.size()) != num_vars_) throw DimensionError("evaluation point size");
    Element acc = domain_.zero();
    for (const auto& t : terms_) {
      Element v = t.coeff;
      for (int i = 0; i < num_vars_; ++i) {
        for (int e = 0; e < t.monomial[i]; ++e) v = domain_.mul(v, point[static_cast<std::size_t>(i)]);
      }
      acc = domain_.add(acc, v);
    }
    return acc;
  }

  // Re-express in another domain (e.g. integer coefficients into GF(p)).
  template <CoefficientDomain D2, typename F>
  Polynomial<D2> map_coefficients(const D2& target, F&& f) const {
    std::vector<typename Polynomial<D2>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.monomial, f(t.coeff)});
    return Polynomial<D2>::from_terms(target, num_vars_, std::move(out));
  }

  // Renames variables: variable i becomes variable mapping[i] of a ring of
  // size target_vars.
  Polynomial remap(int target_vars, std::span<const int> mapping) const {
    if (static_cast<int>(mapping.size()) != num_vars_) throw DimensionError("variable map size");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target_vars);
      for (int i = 0; i < num_vars_; ++i) {
        if (t.monomial[i] == 0) continue;
        const int j = mapping[static_cast<std::size_t>(i)];
        if (j < 0 || j >= target_vars) throw RangeError("variable map target out of range");
        m.set(j, m[j] + t.monomial[i]);
      }
      out.push_back({m, t.coeff});
    }
    return from_terms(domain_, target_vars, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.num_vars_ != b.num_vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) ||
          !a.domain_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

 private:
  static bool grevlex_greater(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    for (int i = a.num_vars() - 1; i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }

  void check_ring(const Polynomial& o) const {
    if (o.num_vars_ != num_vars_) throw DimensionError("polynomials from rings of different size");
  }

  typename std::vector<Term>::const_iterator find(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_greater(t.monomial, key);
    });
    if (it != terms_.end() && it->monomial == m) return it;
    return terms_.end();
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_greater(a.monomial, b.monomial); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().monomial == t.monomial) {
        out.back().coeff = domain_.add(out.back().coeff, t.coeff);
      } else {
        if (!out.empty() && domain_.is_zero(out.back().coeff)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && domain_.is_zero(out.back().coeff)) out.pop_back();
    terms_ = std::move(out);
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    Polynomial r(domain_, num_vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && grevlex_greater(terms_[i].monomial, o.terms_[j].monomial))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || grevlex_greater(o.terms_[j].monomial, terms_[i].monomial)) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.monomial, subtract ? domain_.neg(t.coeff) : t.coeff});
      } else {
        Element c = subtract ? domain_.sub(terms_[i].coeff, o.terms_[j].coeff)
                             : domain_.add(terms_[i].coeff, o.terms_[j].coeff);
        if (!domain_.is_zero(c)) r.terms_.push_back({terms_[i].monomial, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  D domain_{};
  int num_vars_ = 0;
  std::vector<Term> terms_;
};

// Composition p(images[0], ..., images[n-1]). The result lives in the ring
// of the images.
template <CoefficientDomain D>
Polynomial<D> substitute(const Polynomial<D>& p, std::span<const Polynomial<D>> images) {
  if (static_cast<int>(images.size()) != p.num_vars()) {
    throw DimensionError("substitute: one image per variable is required");
  }
  if (images.empty()) return p;
  const int target = images.front().num_vars();
  for (const auto& img : images) {
    if (img.num_vars() != target) throw DimensionError("substitute: images from different rings");
  }
  const D& dom = p.domain();
  // Cache powers of each image.
  std::vector<std::vector<Polynomial<D>>> powers(images.size());
  auto power = [&](std::size_t i, int e) -> const Polynomial<D>& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial<D>::constant(dom, target, dom.one()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial<D> result(dom, target);
  for (const auto& t : p.terms()) {
    Polynomial<D> acc = Polynomial<D>::constant(dom, target, t.coeff);
    for (int i = 0; i < p.num_vars(); ++i) {
      if (t.monomial[i] > 0) acc = acc * power(static_cast<std::size_t>(i), t.monomial[i]);
    }
    result += acc;
  }
  return result;
}

// Leading term under an arbitrary order (terms are stored in grevlex).
template <CoefficientDomain D>
const typename Polynomial<D>::Term& leading_term(const Polynomial<D>& p, const TermOrder& order) {
  if (p.is_zero()) throw RangeError("leading term of the zero polynomial");
  auto terms = p.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    if (order.greater(terms[i].monomial, terms[best].monomial)) best = i;
  }
  return terms[best];
}

// ---------------------------------------------------------------------------
// Text format: sum of terms "c*x0^a*x1^b", e.g. "3*x0^2*x1 - x2 + 5".
// Terms are printed in descending grevlex order; a unit coefficient is
// omitted in front of a non-constant monomial.

std::string format_monomial(const Monomial& m, std::span<const std::string> names);

template <CoefficientDomain D>
std::string to_string(const Polynomial<D>& p, std::span<const std::string> names) {
  if (static_cast<int>(names.size()) != p.num_vars()) {
    throw DimensionError("to_string: one name per variable is required");
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = p.domain().format(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += format_monomial(t.monomial, names);
    }
  }
  return out;
}

// Default names x0, x1, ...
std::vector<std::string> default_variable_names(int num_vars);

namespace detail {

struct ParsedTerm {
  bool negative = false;
  std::string coeff;  // empty means 1
  std::vector<int> exponents;
};

// Tokenizes and parses "c*x^a*..." sums; variables must appear in names.
std::vector<ParsedTerm> parse_terms(std::string_view text, std::span<const std::string> names);

}  // namespace detail

template <CoefficientDomain D>
Polynomial<D> parse_polynomial(const D& domain, std::string_view text, std::span<const std::string> names) {
  const int n = static_cast<int>(names.size());
  std::vector<typename Polynomial<D>::Term> terms;
  for (const auto& pt : detail::parse_terms(text, names)) {
    typename D::Element c = pt.coeff.empty() ? domain.one() : domain.parse(pt.coeff);
    if (pt.negative) c = domain.neg(c);
    terms.push_back({Monomial::from_exponents(pt.exponents), c});
  }
  return Polynomial<D>::from_terms(domain, n, std::move(terms));
}

// Ideal file format: optional "vars: a b c" header, '#' comments, one
// polynomial per non-empty line (a trailing ',' is ignored). Without a
// header the variables are x0..xk, with k the largest index used.
struct PolynomialList {
  std::vector<std::string> variables;
  std::vector<std::string> polynomials;  // unparsed lines
};
PolynomialList read_polynomial_list(std::string_view text);

}  // namespace distvar
