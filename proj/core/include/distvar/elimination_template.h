#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "distvar/gamma_poly.h"

namespace distvar {

// A row is generator f_{generator+1} times the gamma monomial with ring
// index multiplier (see gamma_ring).
struct TemplateRow {
  int generator = 0;
  int multiplier = 0;
  friend bool operator==(const TemplateRow&, const TemplateRow&) = default;
};

struct EliminationTemplate {
  static constexpr int kVersion = 1;
  static constexpr int kNumColumns = 126;
  static constexpr int kBasisSize = 23;
  static constexpr int kNumReducible = kNumColumns - kBasisSize;

  int version = kVersion;
  std::vector<TemplateRow> rows;
  // Ring indices: the 103 non-basis monomials in descending grevlex, then
  // the basis in its listed order.
  std::vector<int> columns;
  // 0 for gamma_1.
  int action_variable = 0;

  // Ring indices of the basis, columns[103..126).
  std::vector<int> basis() const { return {columns.begin() + kNumReducible, columns.end()}; }

  std::string to_json() const;
  // Throws ParseError on malformed input or a version mismatch.
  static EliminationTemplate from_json(std::string_view text);

  friend bool operator==(const EliminationTemplate&, const EliminationTemplate&) = default;
};

// The 23 standard monomials 1, g1, g1g3, ..., g4^4 as ring indices.
const std::array<int, EliminationTemplate::kBasisSize>& standard_basis();

struct TemplateOptions {
  bool prune = false;
  std::uint32_t prime = 30011;
  std::uint64_t seed = 1;
  int action_variable = 0;
};

// The 160-row schedule, validated over GF(prime) on a random instance; with
// prune, reduced to an independent subset of rows.
EliminationTemplate build_template(const TemplateOptions& options = {});

// f_1..f_10 for seven random correspondences mod p.
std::array<GammaPolynomial<PrimeField>, 10> random_instance_generators(const PrimeField& fp, std::mt19937_64& rng);

// Throws ConstructionError unless the template's matrix has rank 103 with
// pivots exactly on the first 103 columns for a random instance mod prime.
void validate_template(const EliminationTemplate& tmpl, std::uint32_t prime = 30011, std::uint64_t seed = 1);

}  // namespace distvar
