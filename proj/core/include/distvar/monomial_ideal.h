#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "distvar/monomial.h"

namespace distvar {

// Monomial ideal stored by its minimal generators, sorted ascending.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  explicit MonomialIdeal(int num_vars) : num_vars_(num_vars) {}
  MonomialIdeal(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return num_vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }

  bool contains(const Monomial& m) const;

  // M : x_j^infinity.
  MonomialIdeal saturate_variable(int j) const;
  // M : m.
  MonomialIdeal quotient(const Monomial& m) const;
  MonomialIdeal sum(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars_ == b.num_vars_ && a.generators_ == b.generators_;
  }

 private:
  int num_vars_ = 0;
  std::vector<Monomial> generators_;
};

// Removes generators divisible by another one (and duplicates).
std::vector<Monomial> minimalize(std::vector<Monomial> generators);

struct HilbertData {
  // Coefficients of the numerator K(t), lowest degree first, where the
  // Hilbert series of R/M is K(t)/(1-t)^num_vars.
  std::vector<std::int64_t> numerator;
  // -1 for the empty projective scheme.
  int projective_dimension = -1;
  std::int64_t degree = 0;
};

HilbertData hilbert_dim_degree(const MonomialIdeal& m);

// Number of standard monomials of each degree 0..max_degree.
std::vector<std::int64_t> hilbert_function(const HilbertData& h, int num_vars, int max_degree);

std::string to_string(const MonomialIdeal& m, std::span<const std::string> names);

}  // namespace distvar
