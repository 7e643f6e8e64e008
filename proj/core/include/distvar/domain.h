#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace distvar {

// Coefficient domains. A domain object carries whatever context its
// elements need (the modulus for prime fields) and performs all element
// arithmetic, so elements themselves stay plain values.

// Z/pZ for a prime p < 2^31.
class PrimeField {
 public:
  using Element = std::uint32_t;
  static constexpr bool kExact = true;
  static constexpr std::uint32_t kDefaultPrime = 30011;

  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element add(Element a, Element b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  // Symmetric representative in (-p/2, p/2].
  std::int64_t lift(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string format(Element a) const { return std::to_string(lift(a)); }
  // Accepts "n" or "n/d".
  Element parse(std::string_view text) const;
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

// Exact rationals backed by Boost.Multiprecision.
class RationalField {
 public:
  using Element = boost::multiprecision::cpp_rational;
  static constexpr bool kExact = true;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(std::int64_t v) const { return Element(v); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return a == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string format(const Element& a) const;
  Element parse(std::string_view text) const;
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

// IEEE double. Only used by the numeric solver; Groebner routines reject it.
class RealField {
 public:
  using Element = double;
  static constexpr bool kExact = false;

  Element zero() const { return 0.0; }
  Element one() const { return 1.0; }
  Element from_int(std::int64_t v) const { return static_cast<double>(v); }
  Element add(Element a, Element b) const { return a + b; }
  Element sub(Element a, Element b) const { return a - b; }
  Element neg(Element a) const { return -a; }
  Element mul(Element a, Element b) const { return a * b; }
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return a / b; }
  bool is_zero(Element a) const { return a == 0.0; }
  bool equal(Element a, Element b) const { return a == b; }

  // Shortest round-trippable decimal form.
  std::string format(Element a) const;
  Element parse(std::string_view text) const;
  std::string name() const { return "RR64"; }

  friend bool operator==(const RealField&, const RealField&) { return true; }
};

template <typename D>
concept CoefficientDomain = requires(const D& d, const typename D::Element& a) {
  { d.zero() } -> std::convertible_to<typename D::Element>;
  { d.one() } -> std::convertible_to<typename D::Element>;
  { d.add(a, a) } -> std::convertible_to<typename D::Element>;
  { d.mul(a, a) } -> std::convertible_to<typename D::Element>;
  { d.inv(a) } -> std::convertible_to<typename D::Element>;
  { d.is_zero(a) } -> std::convertible_to<bool>;
  { d.format(a) } -> std::convertible_to<std::string>;
  { D::kExact } -> std::convertible_to<bool>;
};

// Domains where Groebner computations are meaningful.
template <typename D>
concept ExactDomain = CoefficientDomain<D> && D::kExact;

}  // namespace distvar
