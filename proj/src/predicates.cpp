#include "iskit/predicates.hpp"

#include "iskit/errors.hpp"

namespace iskit {

bool is_group(const FiniteInvSemigroup& S) {
  return S.idempotents().size() == 1;
}

bool is_semilattice(const FiniteInvSemigroup& S) {
  return static_cast<int>(S.idempotents().size()) == S.order();
}

bool is_clifford(const FiniteInvSemigroup& S) {
  for (int e : S.idempotents())
    for (int s = 0; s < S.order(); ++s)
      if (S.product(e, s) != S.product(s, e)) return false;
  return true;
}

bool is_E_unitary(const FiniteInvSemigroup& S) {
  for (int e : S.idempotents())
    for (int s = 0; s < S.order(); ++s)
      if (S.leq(e, s) && !S.is_idempotent(s)) return false;
  return true;
}

bool is_E_star_unitary(const FiniteInvSemigroup& S) {
  auto zero = S.zero();
  for (int e : S.idempotents()) {
    if (zero && e == *zero) continue;
    for (int s = 0; s < S.order(); ++s)
      if (S.leq(e, s) && !S.is_idempotent(s)) return false;
  }
  return true;
}

bool is_groupoid_with_zero(const FiniteInvSemigroup& S) {
  if (!S.zero())
    throw InvalidInputError("groupoid-with-zero test requires a zero element");
  if (S.order() == 1) return false;  // no nonzero part to form a groupoid
  int z = *S.zero();
  for (int s = 0; s < S.order(); ++s) {
    if (s == z) continue;
    for (int t = 0; t < S.order(); ++t) {
      if (t == z || t == s) continue;
      if (S.leq(s, t)) return false;
    }
  }
  return true;
}

}  // namespace iskit
