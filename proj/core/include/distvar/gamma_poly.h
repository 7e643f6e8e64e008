#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "distvar/domain.h"
#include "distvar/polynomial.h"

namespace distvar {

// Dense polynomials of degree <= 5 in gamma_1..gamma_4, the ring of the
// f+E+lambda template.
namespace gamma_ring {

inline constexpr int kVars = 4;
inline constexpr int kMaxDegree = 5;
inline constexpr int kNumMonomials = 126;

using Exponents = std::array<std::uint8_t, kVars>;

// Monomials in descending grevlex order: index 0 is gamma_1^5, the last
// index is 1.
const std::array<Exponents, kNumMonomials>& monomials();
int degree(int index);
// -1 when a component exceeds kMaxDegree or the total degree exceeds it.
int index_of(const Exponents& e);
// Index of the product, or -1 if the degree exceeds kMaxDegree.
int product(int a, int b);
Monomial to_monomial(int index);
int from_monomial(const Monomial& m);

}  // namespace gamma_ring

template <CoefficientDomain D>
class GammaPolynomial {
 public:
  using Element = typename D::Element;

  GammaPolynomial() = default;
  explicit GammaPolynomial(const D& domain) : domain_(domain) { coeffs_.fill(domain.zero()); }

  // sum_i a[i] * gamma_{i+1} + a[4].
  static GammaPolynomial affine(const D& domain, const std::array<Element, 5>& a) {
    GammaPolynomial p(domain);
    for (int i = 0; i < gamma_ring::kVars; ++i) {
      gamma_ring::Exponents e{};
      e[static_cast<std::size_t>(i)] = 1;
      p.coeffs_[static_cast<std::size_t>(gamma_ring::index_of(e))] = a[static_cast<std::size_t>(i)];
    }
    p.coeffs_[static_cast<std::size_t>(gamma_ring::index_of({0, 0, 0, 0}))] = a[4];
    p.degree_ = 1;
    return p;
  }

  const D& domain() const { return domain_; }
  int degree() const { return degree_; }
  const Element& operator[](int index) const { return coeffs_[static_cast<std::size_t>(index)]; }
  const std::array<Element, gamma_ring::kNumMonomials>& coefficients() const { return coeffs_; }

  GammaPolynomial operator+(const GammaPolynomial& o) const { return combine(o, false); }
  GammaPolynomial operator-(const GammaPolynomial& o) const { return combine(o, true); }
  GammaPolynomial operator-() const { return GammaPolynomial(domain_) - *this; }

  GammaPolynomial operator*(const GammaPolynomial& o) const {
    if (degree_ + o.degree_ > gamma_ring::kMaxDegree) throw RangeError("gamma polynomial degree exceeds 5");
    GammaPolynomial r(domain_);
    r.degree_ = degree_ + o.degree_;
    for (int a = 0; a < gamma_ring::kNumMonomials; ++a) {
      const Element& ca = coeffs_[static_cast<std::size_t>(a)];
      if (domain_.is_zero(ca)) continue;
      for (int b = 0; b < gamma_ring::kNumMonomials; ++b) {
        const Element& cb = o.coeffs_[static_cast<std::size_t>(b)];
        if (domain_.is_zero(cb)) continue;
        auto& slot = r.coeffs_[static_cast<std::size_t>(gamma_ring::product(a, b))];
        slot = domain_.add(slot, domain_.mul(ca, cb));
      }
    }
    return r;
  }

  // Sparse form over gamma_1..gamma_4.
  Polynomial<D> to_polynomial() const {
    std::vector<typename Polynomial<D>::Term> terms;
    for (int i = 0; i < gamma_ring::kNumMonomials; ++i) {
      if (!domain_.is_zero(coeffs_[static_cast<std::size_t>(i)])) {
        terms.push_back({gamma_ring::to_monomial(i), coeffs_[static_cast<std::size_t>(i)]});
      }
    }
    return Polynomial<D>::from_terms(domain_, gamma_ring::kVars, std::move(terms));
  }

 private:
  GammaPolynomial combine(const GammaPolynomial& o, bool subtract) const {
    GammaPolynomial r(domain_);
    r.degree_ = std::max(degree_, o.degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      r.coeffs_[i] = subtract ? domain_.sub(coeffs_[i], o.coeffs_[i]) : domain_.add(coeffs_[i], o.coeffs_[i]);
    }
    return r;
  }

  D domain_{};
  std::array<Element, gamma_ring::kNumMonomials> coeffs_{};
  // Upper bound on the true degree.
  int degree_ = 0;
};

// The ten generators in gamma for the 12 affine-linear entries of m:
// three 2x2 minors of the (x_i3, y_i3) columns, det of columns {1,2,5} and
// {1,2,4} (sign as printed), and five 3x3 minors through column 3.
template <CoefficientDomain D>
std::array<GammaPolynomial<D>, 10> gamma_generators(const std::array<GammaPolynomial<D>, 12>& m) {
  // m = [x11,x12,x13,y13,x21,x22,x23,y23,x31,x32,x33,y33]
  const auto& x11 = m[0];
  const auto& x12 = m[1];
  const auto& x13 = m[2];
  const auto& y13 = m[3];
  const auto& x21 = m[4];
  const auto& x22 = m[5];
  const auto& x23 = m[6];
  const auto& y23 = m[7];
  const auto& x31 = m[8];
  const auto& x32 = m[9];
  const auto& x33 = m[10];
  const auto& y33 = m[11];
  using P = GammaPolynomial<D>;
  const P zero(x11.domain());
  const std::array<P, 3> c1{x11, x21, x31};
  const std::array<P, 3> c2{x12, x22, x32};
  const std::array<P, 3> c3{x21 * x31 + x22 * x32 + x23 * x33, -(x11 * x31 + x12 * x32 + x13 * x33), zero};
  const std::array<P, 3> c4{x13, x23, x33};
  const std::array<P, 3> c5{y13, y23, y33};
  auto det = [](const std::array<P, 3>& a, const std::array<P, 3>& b, const std::array<P, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1]) +
           c[0] * (a[1] * b[2] - a[2] * b[1]);
  };
  return {y23 * x33 - x23 * y33,
          y13 * x33 - x13 * y33,
          y13 * x23 - x13 * y23,
          -det(c1, c2, c5),
          -det(c1, c2, c4),
          det(c1, c2, c3),
          det(c1, c3, c4),
          det(c2, c3, c4),
          det(c1, c3, c5),
          det(c2, c3, c5)};
}

// Degrees (2,2,2,3,3,4,4,4,4,4).
inline constexpr std::array<int, 10> kGeneratorDegrees{2, 2, 2, 3, 3, 4, 4, 4, 4, 4};

}  // namespace distvar
