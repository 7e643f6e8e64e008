#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distvar/distortion.h"
#include "distvar/groebner.h"
#include "distvar/toric.h"

namespace distvar {

// Sets u_0, ..., u_n of points in N^r. Coordinate (i, j) of the ambient
// space is parametrized by x_i * l^{u_ij}; flat order is group by group,
// each group in the order given.
class MultiParamConfig {
 public:
  using Point = std::vector<int>;

  MultiParamConfig() = default;
  MultiParamConfig(int r, std::vector<std::vector<Point>> groups);

  // {"r": 2, "groups": [[[0,0]], [[0,0],[1,0]], ...]}
  static MultiParamConfig from_json(std::string_view text);
  std::string to_json() const;

  // u_i = {0, 1, ..., u_i} in N^1.
  static MultiParamConfig from_vector(const DistortionVector& u);

  int r() const { return r_; }
  int num_groups() const { return static_cast<int>(groups_.size()); }
  const std::vector<std::vector<Point>>& groups() const { return groups_; }
  // |u| = N + 1.
  int ambient_size() const { return total_; }
  int index(int i, int j) const;

  // (r+1) x (N+1): exponent rows, then the all-ones row.
  IntMatrix augmented_matrix() const;

  friend bool operator==(const MultiParamConfig&, const MultiParamConfig&) = default;

 private:
  int r_ = 0;
  std::vector<std::vector<Point>> groups_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// (r + n + 1) x (N + 1): exponent rows, then one indicator row per group.
// Its toric ideal is the ideal of the Cayley variety.
IntMatrix cayley_parametrization(const MultiParamConfig& cfg);

// Names for the ambient coordinates: a0 a1 b0 ... for default base names,
// otherwise base, base_1, base_2, ...
std::vector<std::string> cayley_coordinate_names(std::span<const std::string> base, const MultiParamConfig& cfg);

template <ExactDomain D>
Ideal<D> cayley_ideal(const D& domain, const MultiParamConfig& cfg, const GroebnerOptions& options = {}) {
  return toric_ideal(domain, cayley_parametrization(cfg), options);
}

// One one-parameter distortion per parameter. Step k acts on the
// coordinates produced by step k-1 (group i, prefix in N^(k-1)), each
// expanded in place into prefix+(0), ..., prefix+(w).
struct IteratedDecomposition {
  std::vector<std::vector<int>> steps;
  // Final coordinate c corresponds to config coordinate permutation[c].
  std::vector<int> permutation;
  // Per group, the last step's weights, e.g. (0,0) for u_13 above.
  std::vector<std::vector<int>> nested_last;
};

// Absent unless every fiber of every projection is an initial segment.
std::optional<IteratedDecomposition> iterated_decomposition(const MultiParamConfig& cfg);

enum class MultiMethod { kAuto, kElimination, kIterated };

// Generators of the ideal of X_[u] in the config's coordinates.
template <ExactDomain D>
Ideal<D> multi_distortion_generators(const Ideal<D>& ideal, const MultiParamConfig& cfg,
                                     MultiMethod method = MultiMethod::kAuto, const GroebnerOptions& options = {});

// Degree of X_[u] through the iterated decomposition.
template <ExactDomain D>
std::int64_t multi_distortion_degree(const Ideal<D>& ideal, const MultiParamConfig& cfg,
                                     const GroebnerOptions& options = {});

extern template Ideal<PrimeField> multi_distortion_generators(const Ideal<PrimeField>&, const MultiParamConfig&,
                                                              MultiMethod, const GroebnerOptions&);
extern template Ideal<RationalField> multi_distortion_generators(const Ideal<RationalField>&,
                                                                 const MultiParamConfig&, MultiMethod,
                                                                 const GroebnerOptions&);
extern template std::int64_t multi_distortion_degree(const Ideal<PrimeField>&, const MultiParamConfig&,
                                                     const GroebnerOptions&);
extern template std::int64_t multi_distortion_degree(const Ideal<RationalField>&, const MultiParamConfig&,
                                                     const GroebnerOptions&);

}  // namespace distvar
