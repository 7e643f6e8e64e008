#include "distvar/toric.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace distvar {

std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a) {
  const std::size_t d = a.size();
  const std::size_t m = d == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != m) throw DimensionError("integer_kernel: ragged matrix");
  }
  // Rows of [A^T | I]; unimodular row operations keep the right block a
  // basis change of Z^m.
  std::vector<std::vector<std::int64_t>> rows(m, std::vector<std::int64_t>(d + m, 0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < d; ++i) rows[j][i] = a[i][j];
    rows[j][d + j] = 1;
  }
  auto combine = [&](std::size_t target, std::size_t source, std::int64_t q) {
    for (std::size_t k = 0; k < d + m; ++k) rows[target][k] -= q * rows[source][k];
  };
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < d && pivot_row < m; ++col) {
    // Euclid on column col over rows pivot_row..m-1.
    while (true) {
      std::size_t best = m;
      for (std::size_t r = pivot_row; r < m; ++r) {
        if (rows[r][col] != 0 && (best == m || std::llabs(rows[r][col]) < std::llabs(rows[best][col]))) best = r;
      }
      if (best == m) break;
      std::swap(rows[pivot_row], rows[best]);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < m; ++r) {
        if (rows[r][col] == 0) continue;
        combine(r, pivot_row, rows[r][col] / rows[pivot_row][col]);
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++pivot_row;
        break;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> kernel;
  for (std::size_t r = pivot_row; r < m; ++r) kernel.emplace_back(rows[r].begin() + static_cast<long>(d), rows[r].end());
  return kernel;
}

template <ExactDomain D>
Polynomial<D> lattice_binomial(const D& domain, const std::vector<std::int64_t>& v) {
  const int n = static_cast<int>(v.size());
  Monomial plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    const auto e = v[static_cast<std::size_t>(i)];
    if (e > 0) plus.set(i, static_cast<int>(e));
    if (e < 0) minus.set(i, static_cast<int>(-e));
  }
  return Polynomial<D>::term(domain, plus, domain.one()) - Polynomial<D>::term(domain, minus, domain.one());
}

namespace {

// Largest power of x_j dividing every term, removed.
template <class D>
Polynomial<D> strip_variable(const Polynomial<D>& p, int j) {
  int k = -1;
  for (const auto& t : p.terms()) k = k < 0 ? t.monomial[j] : std::min(k, t.monomial[j]);
  if (k <= 0) return p;
  std::vector<typename Polynomial<D>::Term> terms;
  const Monomial divisor = Monomial::variable(p.num_vars(), j, k);
  for (const auto& t : p.terms()) terms.push_back({t.monomial / divisor, t.coeff});
  return Polynomial<D>::from_terms(p.domain(), p.num_vars(), std::move(terms));
}

template <class D>
Ideal<D> saturate_one(const Ideal<D>& ideal, int j, const GroebnerOptions& options) {
  const int n = ideal.num_vars();
  if (!ideal.is_homogeneous()) {
    return saturate(ideal, Polynomial<D>::variable(ideal.domain(), n, j), options);
  }
  // Grevlex with x_j last: x_j divides a basis element iff it divides its
  // leading term, and stripping x_j gives a basis of the saturation.
  std::vector<int> to_last(static_cast<std::size_t>(n));
  std::vector<int> back(static_cast<std::size_t>(n));
  for (int i = 0, pos = 0; i < n; ++i) {
    if (i == j) continue;
    to_last[static_cast<std::size_t>(i)] = pos;
    back[static_cast<std::size_t>(pos)] = i;
    ++pos;
  }
  to_last[static_cast<std::size_t>(j)] = n - 1;
  back[static_cast<std::size_t>(n - 1)] = j;
  Ideal<D> moved(ideal.domain(), n);
  for (const auto& g : ideal.generators()) moved.add(g.remap(n, to_last));
  const auto gb = buchberger(moved, TermOrder::grevlex(), options);
  Ideal<D> out(ideal.domain(), n);
  for (const auto& g : gb.elements) out.add(strip_variable(g, n - 1).remap(n, back));
  return out;
}

}  // namespace

template <ExactDomain D>
Ideal<D> saturate_all_variables(const Ideal<D>& ideal, const GroebnerOptions& options) {
  Ideal<D> current = ideal;
  for (int j = 0; j < ideal.num_vars(); ++j) current = saturate_one(current, j, options);
  return current;
}

template <ExactDomain D>
Ideal<D> toric_ideal(const D& domain, const IntMatrix& a, const GroebnerOptions& options) {
  if (a.empty() || a.front().empty()) throw DimensionError("toric_ideal: empty matrix");
  const int n = static_cast<int>(a.front().size());
  Ideal<D> lattice(domain, n);
  for (const auto& v : integer_kernel(a)) lattice.add(lattice_binomial(domain, v));
  Ideal<D> toric = saturate_all_variables(lattice, options);
  const auto gb = buchberger(toric, TermOrder::grevlex(), options);
  Ideal<D> reduced(domain, n, gb.elements);
  if (reduced.is_homogeneous()) return minimalize_homogeneous(reduced, options);
  return reduced;
}

template Polynomial<PrimeField> lattice_binomial(const PrimeField&, const std::vector<std::int64_t>&);
template Polynomial<RationalField> lattice_binomial(const RationalField&, const std::vector<std::int64_t>&);
template Ideal<PrimeField> toric_ideal(const PrimeField&, const IntMatrix&, const GroebnerOptions&);
template Ideal<RationalField> toric_ideal(const RationalField&, const IntMatrix&, const GroebnerOptions&);
template Ideal<PrimeField> saturate_all_variables(const Ideal<PrimeField>&, const GroebnerOptions&);
template Ideal<RationalField> saturate_all_variables(const Ideal<RationalField>&, const GroebnerOptions&);

}  // namespace distvar
