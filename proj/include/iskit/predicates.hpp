#ifndef ISKIT_PREDICATES_HPP
#define ISKIT_PREDICATES_HPP

#include "iskit/inverse_semigroup.hpp"

namespace iskit {

// exactly one idempotent
bool is_group(const FiniteInvSemigroup& S);

// every element idempotent
bool is_semilattice(const FiniteInvSemigroup& S);

// idempotents commute with everything
bool is_clifford(const FiniteInvSemigroup& S);

// idempotents are the only elements above idempotents
bool is_E_unitary(const FiniteInvSemigroup& S);

// idempotents are the only elements above nonzero idempotents; without a
// zero this coincides with E-unitarity
bool is_E_star_unitary(const FiniteInvSemigroup& S);

// the natural order is equality off the zero; requires a zero
bool is_groupoid_with_zero(const FiniteInvSemigroup& S);

}  // namespace iskit

#endif
