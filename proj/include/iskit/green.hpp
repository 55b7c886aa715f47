#ifndef ISKIT_GREEN_HPP
#define ISKIT_GREEN_HPP

#include <vector>

#include "iskit/inverse_semigroup.hpp"
#include "iskit/relation.hpp"

namespace iskit {

// The underlying groupoid: same elements, composition restricted to the
// pairs with d(s) = r(t), idempotents as the identities.
struct GroupoidView {
  std::vector<int> identities;  // idempotent indices
  std::vector<int> dom, ran;    // d(s), r(s) per element
  Partition components;         // connected components, over all elements
};

// Verifies the groupoid axioms on the restricted product:
//   association of defined triples, existence matching, local identities.
GroupoidView groupoid_view(const FiniteInvSemigroup& S);

struct GreenData {
  Partition L, R, H, D, J;
};

// L by equal d, R by equal r, H as their meet, D from the connected
// components of the underlying groupoid, J by equality of two-sided
// principal ideals.  Checks D ⊆ J.
GreenData green_relations(const FiniteInvSemigroup& S);

// {asb : a, b in S}, as a sorted list; always contains s
std::vector<int> principal_two_sided_ideal(const FiniteInvSemigroup& S, int s);

// Nonzero elements whose only strictly smaller element is zero.  Requires a
// zero; the result is verified closed under the restricted product.
std::vector<int> minimal_groupoid_elements(const FiniteInvSemigroup& S);

}  // namespace iskit

#endif
