#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distvar/monomial.h"

namespace distvar {

enum class Ordering { kLess, kEqual, kGreater };

// Multiplicative total orders on monomials. Variable 0 is the largest
// variable for every kind.
//
//  - grevlex: total degree, then the smaller exponent in the last
//    differing variable wins.
//  - lex: first differing exponent decides.
//  - block(k): grevlex on variables [0, k), ties broken by grevlex on the
//    remaining variables. Eliminates the first k variables.
//  - weighted(w): larger w.e wins, ties broken by grevlex. Negative weights
//    are allowed; such orders are only well-founded on homogeneous input.
class TermOrder {
 public:
  enum class Kind { kGrevlex, kLex, kBlock, kWeighted };

  TermOrder() = default;

  static TermOrder grevlex();
  static TermOrder lex();
  static TermOrder block(int elimination_block_size);
  static TermOrder weighted(std::vector<std::int64_t> weights);
  // The order refining -u used for initial ideals.
  static TermOrder refining_negative(const std::vector<int>& u);

  Kind kind() const { return kind_; }
  int block_size() const { return block_size_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }

  // Throws DimensionError when a and b live in different rings, or when a
  // weight vector does not match the ring.
  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::kGreater;
  }

  // False for weighted orders with a negative weight.
  bool is_well_founded() const;

  std::string describe() const;

 private:
  Kind kind_ = Kind::kGrevlex;
  int block_size_ = 0;
  std::vector<std::int64_t> weights_;
};

}  // namespace distvar
