#include "distvar/distortion.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace distvar {

DistortionVector::DistortionVector(std::vector<int> u) : u_(std::move(u)) {
  if (u_.empty()) throw DimensionError("distortion vector is empty");
  for (int x : u_) {
    if (x < 0) throw RangeError("distortion vector entries must be non-negative");
    offsets_.push_back(total_ + static_cast<int>(offsets_.size()));
    total_ += x;
  }
  if (total_ == 0) throw RangeError("distortion vector must be non-zero");
  if (ambient_size() > kMaxVariables) throw DimensionError("distortion vector gives too many coordinates");
}

DistortionVector DistortionVector::parse(std::string_view text) {
  std::vector<int> u;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      u.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("trailing characters");
    } catch (const std::logic_error&) {
      throw ParseError("distortion vector entry is not an integer: '" + item + "'");
    }
  }
  return DistortionVector(std::move(u));
}

int DistortionVector::index(int j, int a) const {
  if (j < 0 || j >= size() || a < 0 || a > u_[static_cast<std::size_t>(j)]) {
    throw RangeError("scroll coordinate index out of range");
  }
  return offsets_[static_cast<std::size_t>(j)] + a;
}

std::vector<int> DistortionVector::ambient_weights() const {
  std::vector<int> w;
  for (int x : u_) {
    for (int a = 0; a <= x; ++a) w.push_back(a);
  }
  return w;
}

std::vector<int> DistortionVector::ambient_groups() const {
  std::vector<int> g;
  for (int j = 0; j < size(); ++j) g.insert(g.end(), static_cast<std::size_t>(u_[static_cast<std::size_t>(j)]) + 1, j);
  return g;
}

std::string DistortionVector::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < u_.size(); ++j) out += (j ? "," : "") + std::to_string(u_[j]);
  return out;
}

std::vector<std::string> scroll_coordinate_names(std::span<const std::string> base, const DistortionVector& u) {
  if (static_cast<int>(base.size()) != u.size()) throw DimensionError("one base name per group is required");
  const auto defaults = default_variable_names(u.size());
  const bool default_names = std::equal(base.begin(), base.end(), defaults.begin()) && u.size() <= 26;
  const bool matrix_names =
      std::all_of(base.begin(), base.end(), [](const std::string& s) {
        return s.size() == 3 && s[0] == 'x' && std::isdigit(static_cast<unsigned char>(s[1])) &&
               std::isdigit(static_cast<unsigned char>(s[2]));
      }) &&
      *std::max_element(u.values().begin(), u.values().end()) <= 2;
  std::vector<std::string> out;
  for (int j = 0; j < u.size(); ++j) {
    for (int a = 0; a <= u[j]; ++a) {
      if (default_names) {
        out.push_back(std::string(1, static_cast<char>('a' + j)) + std::to_string(a));
      } else if (matrix_names) {
        out.push_back(std::string(1, "xyz"[a]) + base[static_cast<std::size_t>(j)].substr(1));
      } else {
        out.push_back(a == 0 ? base[static_cast<std::size_t>(j)]
                             : base[static_cast<std::size_t>(j)] + "_" + std::to_string(a));
      }
    }
  }
  return out;
}

std::int64_t monomial_weight(const Monomial& nu, const DistortionVector& u) {
  if (nu.num_vars() != u.size()) throw DimensionError("monomial does not match the distortion vector");
  std::int64_t w = 0;
  for (int j = 0; j < u.size(); ++j) w += static_cast<std::int64_t>(nu[j]) * u[j];
  return w;
}

Monomial distort_monomial(const Monomial& nu, int i, const DistortionVector& u) {
  if (i < 0 || i > monomial_weight(nu, u)) throw RangeError("distortion index outside 0..nu.u");
  Monomial out(u.ambient_size());
  int remaining = i;
  for (int j = u.size() - 1; j >= 0; --j) {
    const int e = nu[j];
    if (e == 0) continue;
    const int uj = u[j];
    const int w = std::min(remaining, e * uj);
    remaining -= w;
    if (uj == 0 || w == 0) {
      out.set(u.index(j, 0), e);
      continue;
    }
    const int q = w / uj;
    const int rem = w % uj;
    auto bump = [&](int a, int k) {
      if (k == 0) return;
      const int idx = u.index(j, a);
      out.set(idx, out[idx] + k);
    };
    bump(uj, q);
    if (rem > 0) {
      bump(rem, 1);
      bump(0, e - q - 1);
    } else {
      bump(0, e - q);
    }
  }
  return out;
}

template <ExactDomain D>
Ideal<D> distortion_ideal_generators(const Ideal<D>& ideal, const DistortionVector& u, const GroebnerOptions& options) {
  if (ideal.num_vars() != u.size()) throw DimensionError("ideal ring does not match the distortion vector");
  if (!ideal.is_homogeneous()) throw RangeError("distortion_ideal_generators: generators must be homogeneous");
  Ideal<D> out(ideal.domain(), u.ambient_size(), scroll_minors(ideal.domain(), u));
  const auto gb = buchberger(ideal, TermOrder::refining_negative(u.values()), options);
  for (const auto& p : gb.elements) {
    const auto top = min_weight(p, u);
    for (int i = 0; i <= top; ++i) out.add(distort_polynomial(p, i, u));
  }
  return out;
}

std::int64_t degree_bound(std::int64_t degree_x, int codim, const DistortionVector& u) {
  const int n = u.size() - 1;
  if (codim < 0 || codim > n) throw RangeError("codimension outside 0..n");
  std::vector<int> sorted = u.values();
  std::sort(sorted.begin(), sorted.end());
  std::int64_t s = 0;
  for (int j = codim; j <= n; ++j) s += sorted[static_cast<std::size_t>(j)];
  return degree_x * s;
}

template <ExactDomain D>
DistortionDegree distortion_degree_details(const Ideal<D>& ideal, const DistortionVector& u,
                                           const GroebnerOptions& options) {
  if (ideal.num_vars() != u.size()) throw DimensionError("ideal ring does not match the distortion vector");
  const MonomialIdeal m = initial_ideal(ideal, std::span<const int>(u.values()), options);
  DistortionDegree out;
  out.dimension_x = hilbert_dim_degree(m).projective_dimension;
  for (int j = 0; j < u.size(); ++j) {
    std::int64_t d = 0;
    if (u[j] != 0) {
      const HilbertData h = hilbert_dim_degree(m.saturate_variable(j));
      if (h.projective_dimension == out.dimension_x) d = h.degree;
    }
    out.saturation_degrees.push_back(d);
    out.degree += d * u[j];
  }
  return out;
}

bool bound_attained(const Ideal<PrimeField>& ideal, const DistortionVector& u, std::uint64_t seed, int attempts,
                    const GroebnerOptions& options) {
  const int n = u.size() - 1;
  if (ideal.num_vars() != n + 1) throw DimensionError("ideal ring does not match the distortion vector");
  const int dim = hilbert_data(ideal, options).projective_dimension;
  if (dim < 0) throw RangeError("bound_attained: X is empty");
  const int codim = n - dim;
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return u[a] < u[b]; });
  const int uc = u[perm[static_cast<std::size_t>(codim)]];
  int lo = codim, hi = codim;
  while (lo > 0 && u[perm[static_cast<std::size_t>(lo) - 1]] == uc) --lo;
  while (hi < n && u[perm[static_cast<std::size_t>(hi) + 1]] == uc) ++hi;

  const PrimeField& field = ideal.domain();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coeff(1, field.modulus() - 1);
  for (int attempt = 0; attempt < std::max(1, attempts); ++attempt) {
    Ideal<PrimeField> probe = ideal;
    for (int p = hi + 1; p <= n; ++p) {
      probe.add(Polynomial<PrimeField>::variable(field, n + 1, perm[static_cast<std::size_t>(p)]));
    }
    for (int k = 0; k < hi - codim + 1; ++k) {
      Polynomial<PrimeField> form(field, n + 1);
      for (int p = lo; p <= hi; ++p) {
        form += Polynomial<PrimeField>::variable(field, n + 1, perm[static_cast<std::size_t>(p)]).scaled(coeff(rng));
      }
      probe.add(form);
    }
    if (hilbert_data(probe, options).projective_dimension < 0) return true;
  }
  return false;
}

template Ideal<PrimeField> distortion_ideal_generators(const Ideal<PrimeField>&, const DistortionVector&,
                                                       const GroebnerOptions&);
template Ideal<RationalField> distortion_ideal_generators(const Ideal<RationalField>&, const DistortionVector&,
                                                          const GroebnerOptions&);
template DistortionDegree distortion_degree_details(const Ideal<PrimeField>&, const DistortionVector&,
                                                    const GroebnerOptions&);
template DistortionDegree distortion_degree_details(const Ideal<RationalField>&, const DistortionVector&,
                                                    const GroebnerOptions&);

}  // namespace distvar
