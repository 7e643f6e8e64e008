#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "distvar/groebner.h"

namespace distvar {

// u = (u_0, ..., u_n), not all zero. Group j of the ambient space has
// u_j + 1 coordinates x_{j,0}, ..., x_{j,u_j}, parametrized by x_j * l^a.
class DistortionVector {
 public:
  DistortionVector() = default;
  explicit DistortionVector(std::vector<int> u);

  // Comma separated, e.g. "0,0,1,0,0,1,1,1,2".
  static DistortionVector parse(std::string_view text);

  const std::vector<int>& values() const { return u_; }
  int operator[](int j) const { return u_[static_cast<std::size_t>(j)]; }
  // n + 1.
  int size() const { return static_cast<int>(u_.size()); }
  // |u|.
  int total() const { return total_; }
  // Number of ambient coordinates, N + 1 = |u| + n + 1.
  int ambient_size() const { return total_ + size(); }
  // Flat index of x_{j,a}.
  int index(int j, int a) const;
  // Weight a of each ambient coordinate.
  std::vector<int> ambient_weights() const;
  // Group j of each ambient coordinate.
  std::vector<int> ambient_groups() const;

  std::string to_string() const;

  friend bool operator==(const DistortionVector&, const DistortionVector&) = default;

 private:
  std::vector<int> u_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// Ambient variable names. Default names x0..xn become a0 a1 ..., b0 ...;
// matrix names xij with u_j <= 2 become xij, yij, zij; otherwise the
// group's name gets a suffix _1, _2, ... after the first coordinate.
std::vector<std::string> scroll_coordinate_names(std::span<const std::string> base, const DistortionVector& u);

// The C(|u|, 2) minors top_p * bottom_q - bottom_p * top_q of the
// concatenated Hankel matrix, columns (x_{j,a}, x_{j,a+1}) in group order.
template <CoefficientDomain D>
std::vector<Polynomial<D>> scroll_minors(const D& domain, const DistortionVector& u) {
  std::vector<std::pair<int, int>> cols;
  for (int j = 0; j < u.size(); ++j) {
    for (int a = 0; a < u[j]; ++a) cols.emplace_back(u.index(j, a), u.index(j, a + 1));
  }
  const int n = u.ambient_size();
  auto var = [&](int i) { return Polynomial<D>::variable(domain, n, i); };
  std::vector<Polynomial<D>> out;
  for (std::size_t p = 0; p < cols.size(); ++p) {
    for (std::size_t q = p + 1; q < cols.size(); ++q) {
      out.push_back(var(cols[p].first) * var(cols[q].second) - var(cols[p].second) * var(cols[q].first));
    }
  }
  return out;
}

// The standard ambient monomial of weight i over x^nu: weight is allocated
// to the last groups first, and inside a group with weight w,
// x_{j,u_j}^q * x_{j,rem} * x_{j,0}^(nu_j - q - 1) with q = w / u_j.
Monomial distort_monomial(const Monomial& nu, int i, const DistortionVector& u);

// nu . u
std::int64_t monomial_weight(const Monomial& nu, const DistortionVector& u);

// Smallest nu . u over the terms of p.
template <CoefficientDomain D>
std::int64_t min_weight(const Polynomial<D>& p, const DistortionVector& u) {
  if (p.is_zero()) throw RangeError("min_weight of the zero polynomial");
  std::int64_t best = -1;
  for (const auto& t : p.terms()) {
    const auto w = monomial_weight(t.monomial, u);
    if (best < 0 || w < best) best = w;
  }
  return best;
}

template <CoefficientDomain D>
Polynomial<D> distort_polynomial(const Polynomial<D>& p, int i, const DistortionVector& u) {
  if (p.num_vars() != u.size()) throw DimensionError("distort_polynomial: ring does not match u");
  if (!p.is_zero() && (i < 0 || i > min_weight(p, u))) {
    throw RangeError("distortion index exceeds the minimum weight of the polynomial");
  }
  std::vector<typename Polynomial<D>::Term> terms;
  for (const auto& t : p.terms()) terms.push_back({distort_monomial(t.monomial, i, u), t.coeff});
  return Polynomial<D>::from_terms(p.domain(), u.ambient_size(), std::move(terms));
}

// Images of the parametrization x_{j,a} -> x_j * l^a, in the ring with
// variables x_0..x_n, l (l last).
template <CoefficientDomain D>
std::vector<Polynomial<D>> scroll_parametrization(const D& domain, const DistortionVector& u) {
  const int n = u.size() + 1;
  const auto lambda = Polynomial<D>::variable(domain, n, n - 1);
  std::vector<Polynomial<D>> images;
  for (int j = 0; j < u.size(); ++j) {
    auto img = Polynomial<D>::variable(domain, n, j);
    for (int a = 0; a <= u[j]; ++a) {
      images.push_back(img);
      img = img * lambda;
    }
  }
  return images;
}

// Scroll minors followed by p_[i] for p in the reduced basis of I under
// weight -u, 0 <= i <= min_weight(p).
template <ExactDomain D>
Ideal<D> distortion_ideal_generators(const Ideal<D>& ideal, const DistortionVector& u,
                                     const GroebnerOptions& options = {});

// deg X * (sum of the n - codim + 1 largest entries of u).
std::int64_t degree_bound(std::int64_t degree_x, int codim, const DistortionVector& u);

struct DistortionDegree {
  std::int64_t degree = 0;
  int dimension_x = -1;
  // deg(in(X) : x_j^inf) when its dimension equals dim X, else 0.
  std::vector<std::int64_t> saturation_degrees;
};

template <ExactDomain D>
DistortionDegree distortion_degree_details(const Ideal<D>& ideal, const DistortionVector& u,
                                           const GroebnerOptions& options = {});

template <ExactDomain D>
std::int64_t distortion_degree(const Ideal<D>& ideal, const DistortionVector& u, const GroebnerOptions& options = {}) {
  return distortion_degree_details(ideal, u, options).degree;
}

// d * |u| - min_weight(psi) for a homogeneous psi of degree d.
template <CoefficientDomain D>
std::int64_t tropical_hypersurface_degree(const Polynomial<D>& psi, const DistortionVector& u) {
  if (psi.is_zero()) throw RangeError("tropical degree of the zero polynomial");
  if (!psi.is_homogeneous()) throw RangeError("tropical degree needs a homogeneous polynomial");
  return static_cast<std::int64_t>(psi.total_degree()) * u.total() - min_weight(psi, u);
}

// Randomized test of V(L_u) and X being disjoint, with generic linear
// forms over the prime field; up to `attempts` fresh draws.
bool bound_attained(const Ideal<PrimeField>& ideal, const DistortionVector& u, std::uint64_t seed = 1,
                    int attempts = 3, const GroebnerOptions& options = {});

extern template Ideal<PrimeField> distortion_ideal_generators(const Ideal<PrimeField>&, const DistortionVector&,
                                                              const GroebnerOptions&);
extern template Ideal<RationalField> distortion_ideal_generators(const Ideal<RationalField>&,
                                                                 const DistortionVector&, const GroebnerOptions&);
extern template DistortionDegree distortion_degree_details(const Ideal<PrimeField>&, const DistortionVector&,
                                                           const GroebnerOptions&);
extern template DistortionDegree distortion_degree_details(const Ideal<RationalField>&, const DistortionVector&,
                                                           const GroebnerOptions&);

}  // namespace distvar
