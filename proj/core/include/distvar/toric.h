#pragma once

#include <cstdint>
#include <vector>

#include "distvar/groebner.h"

namespace distvar {

// Row-major integer matrix.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

// Lattice basis of {v in Z^m : A v = 0}, one vector per entry.
std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& a);

// x^{v+} - x^{v-} in a ring with v.size() variables.
template <ExactDomain D>
Polynomial<D> lattice_binomial(const D& domain, const std::vector<std::int64_t>& v);

// Prime toric ideal of the monomial map whose exponent vectors are the
// columns of a. Homogeneous lattices give a minimal generating set.
template <ExactDomain D>
Ideal<D> toric_ideal(const D& domain, const IntMatrix& a, const GroebnerOptions& options = {});

// I : x_j^infinity for each variable in turn.
template <ExactDomain D>
Ideal<D> saturate_all_variables(const Ideal<D>& ideal, const GroebnerOptions& options = {});

extern template Polynomial<PrimeField> lattice_binomial(const PrimeField&, const std::vector<std::int64_t>&);
extern template Polynomial<RationalField> lattice_binomial(const RationalField&, const std::vector<std::int64_t>&);
extern template Ideal<PrimeField> toric_ideal(const PrimeField&, const IntMatrix&, const GroebnerOptions&);
extern template Ideal<RationalField> toric_ideal(const RationalField&, const IntMatrix&, const GroebnerOptions&);
extern template Ideal<PrimeField> saturate_all_variables(const Ideal<PrimeField>&, const GroebnerOptions&);
extern template Ideal<RationalField> saturate_all_variables(const Ideal<RationalField>&, const GroebnerOptions&);

}  // namespace distvar
