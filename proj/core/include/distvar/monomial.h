#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "distvar/errors.h"

namespace distvar {

// Every ring in this project has at most this many variables.
inline constexpr int kMaxVariables = 32;

// Dense exponent vector x^e over a ring with num_vars() variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int num_vars);
  Monomial(std::initializer_list<int> exponents);

  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int num_vars, int index, int power = 1);

  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  int operator[](int i) const { return exponents_[static_cast<std::size_t>(i)]; }
  void set(int i, int exponent);

  std::span<const std::uint16_t> exponents() const {
    return {exponents_.data(), static_cast<std::size_t>(num_vars_)};
  }
  std::vector<int> to_vector() const;

  // Bit j is set iff variable j occurs.
  std::uint32_t support() const { return support_; }

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) reversed: *this must be divisible by other.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  // Weighted degree sum_i w_i e_i.
  std::int64_t weight(std::span<const std::int64_t> w) const;

  friend bool operator==(const Monomial& a, const Monomial& b);
  // Lexicographic on (num_vars, exponents); only for ordered containers.
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

 private:
  void check_same_ring(const Monomial& other) const;

  std::array<std::uint16_t, kMaxVariables> exponents_{};
  std::int32_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint8_t num_vars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of total degree <= max_degree in num_vars variables.
std::vector<Monomial> monomials_up_to_degree(int num_vars, int max_degree);


// ---------------------------------------------------------------------------

inline Monomial::Monomial(int num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) {
    throw DimensionError("monomial ring size out of range");
  }
  num_vars_ = static_cast<std::uint8_t>(num_vars);
}

inline Monomial::Monomial(std::initializer_list<int> exponents)
    : Monomial(static_cast<int>(exponents.size())) {
  int i = 0;
  for (int e : exponents) set(i++, e);
}

inline Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(static_cast<int>(exponents.size()));
  for (std::size_t i = 0; i < exponents.size(); ++i) m.set(static_cast<int>(i), exponents[i]);
  return m;
}

inline Monomial Monomial::variable(int num_vars, int index, int power) {
  Monomial m(num_vars);
  m.set(index, power);
  return m;
}

inline void Monomial::set(int i, int exponent) {
  if (i < 0 || i >= num_vars_) throw RangeError("variable index out of range");
  if (exponent < 0 || exponent > 0xFFFF) throw RangeError("exponent out of range");
  auto& slot = exponents_[static_cast<std::size_t>(i)];
  degree_ += exponent - slot;
  slot = static_cast<std::uint16_t>(exponent);
  if (exponent > 0) {
    support_ |= (1u << i);
  } else {
    support_ &= ~(1u << i);
  }
}

inline std::vector<int> Monomial::to_vector() const {
  return std::vector<int>(exponents().begin(), exponents().end());
}

inline void Monomial::check_same_ring(const Monomial& other) const {
  if (num_vars_ != other.num_vars_) {
    throw DimensionError("monomials from rings of different size");
  }
}

inline bool Monomial::divides(const Monomial& other) const {
  if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) return false;
  for (int i = 0; i < num_vars_; ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

inline Monomial Monomial::operator*(const Monomial& other) const {
  check_same_ring(other);
  Monomial r = *this;
  for (int i = 0; i < num_vars_; ++i) {
    const int e = exponents_[i] + other.exponents_[i];
    if (e > 0xFFFF) throw RangeError("exponent overflow");
    r.exponents_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

inline Monomial Monomial::operator/(const Monomial& other) const {
  check_same_ring(other);
  if (!other.divides(*this)) throw RangeError("monomial division is not exact");
  Monomial r(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    r.exponents_[i] = static_cast<std::uint16_t>(exponents_[i] - other.exponents_[i]);
    if (r.exponents_[i] != 0) r.support_ |= (1u << i);
  }
  r.degree_ = degree_ - other.degree_;
  return r;
}

inline Monomial Monomial::lcm(const Monomial& other) const {
  check_same_ring(other);
  Monomial r(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    r.exponents_[i] = exponents_[i] > other.exponents_[i] ? exponents_[i] : other.exponents_[i];
    r.degree_ += r.exponents_[i];
  }
  r.support_ = support_ | other.support_;
  return r;
}

inline Monomial Monomial::gcd(const Monomial& other) const {
  check_same_ring(other);
  Monomial r(num_vars_);
  for (int i = 0; i < num_vars_; ++i) {
    r.exponents_[i] = exponents_[i] < other.exponents_[i] ? exponents_[i] : other.exponents_[i];
    r.degree_ += r.exponents_[i];
  }
  r.support_ = support_ & other.support_;
  return r;
}

inline std::int64_t Monomial::weight(std::span<const std::int64_t> w) const {
  if (static_cast<int>(w.size()) != num_vars_) {
    throw DimensionError("weight vector does not match the ring");
  }
  std::int64_t s = 0;
  for (int i = 0; i < num_vars_; ++i) s += w[static_cast<std::size_t>(i)] * exponents_[i];
  return s;
}

inline bool operator==(const Monomial& a, const Monomial& b) {
  if (a.num_vars_ != b.num_vars_ || a.degree_ != b.degree_ || a.support_ != b.support_) return false;
  for (int i = 0; i < a.num_vars_; ++i) {
    if (a.exponents_[i] != b.exponents_[i]) return false;
  }
  return true;
}

inline bool operator<(const Monomial& a, const Monomial& b) {
  if (a.num_vars_ != b.num_vars_) return a.num_vars_ < b.num_vars_;
  for (int i = 0; i < a.num_vars_; ++i) {
    if (a.exponents_[i] != b.exponents_[i]) return a.exponents_[i] < b.exponents_[i];
  }
  return false;
}

inline std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ num_vars_;
  for (int i = 0; i < num_vars_; ++i) {
    h ^= exponents_[i] + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

inline std::vector<Monomial> monomials_up_to_degree(int num_vars, int max_degree) {
  std::vector<Monomial> out;
  Monomial m(num_vars);
  // Depth-first over exponent vectors with bounded total degree.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == num_vars) {
      out.push_back(m);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      m.set(var, e);
      self(self, var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace distvar
