#ifndef ISKIT_HOMOMORPHISM_HPP
#define ISKIT_HOMOMORPHISM_HPP

#include <optional>
#include <vector>

#include "iskit/congruence.hpp"
#include "iskit/inverse_semigroup.hpp"

namespace iskit {

// Product-preserving map between two finite inverse semigroups, kept with
// copies of both.  Zero and identity are preserved whenever both sides
// have them.
struct Homomorphism {
  FiniteInvSemigroup source;
  FiniteInvSemigroup target;
  std::vector<int> map;  // element of source -> element of target

  int apply(int s) const { return map[s]; }
};

Homomorphism make_homomorphism(FiniteInvSemigroup source,
                               FiniteInvSemigroup target,
                               std::vector<int> map);

// partition of the source by equal images
Congruence relation_kernel(const Homomorphism& theta);

// preimage of the target's idempotents; always a normal subsemigroup
NormalSubsemigroup kernel_of_hom(const Homomorphism& theta);

bool is_idempotent_separating(const Homomorphism& theta);
bool is_injective(const Homomorphism& theta);
bool is_surjective(const Homomorphism& theta);

struct StarMapReport {
  bool star_injective;
  bool star_surjective;
};

// Restrictions to L-classes: injective/surjective onto the image's
// L-class.  Star-injectivity is also computed as "idempotent preimages
// are idempotent" and as "relation kernel within the compatibility
// relation"; the three must agree.
StarMapReport star_maps(const Homomorphism& theta);

// the canonical map onto the quotient
Homomorphism quotient_hom(const FiniteInvSemigroup& S, const Congruence& rho);

// For theta: S -> T, the induced map S/sigma -> T/sigma sending the class
// of s to the class of theta(s); verified well defined, and the square
// with the two quotient maps commutes.
Homomorphism induced_group_hom(const Homomorphism& theta);

// Backtracking search for an isomorphism, mapping a small generating set
// and pruning with elementwise invariants.  Returns the element map.
std::optional<std::vector<int>> find_isomorphism(const FiniteInvSemigroup& A,
                                                 const FiniteInvSemigroup& B);

bool are_isomorphic(const FiniteInvSemigroup& A, const FiniteInvSemigroup& B);

}  // namespace iskit

#endif
