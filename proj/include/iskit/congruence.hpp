#ifndef ISKIT_CONGRUENCE_HPP
#define ISKIT_CONGRUENCE_HPP

#include <vector>

#include "iskit/inverse_semigroup.hpp"
#include "iskit/relation.hpp"

namespace iskit {

// A congruence on a host semigroup, kept as a validated partition.
class Congruence {
 public:
  static Congruence checked(const FiniteInvSemigroup& S, Partition p);
  static Congruence equality(const FiniteInvSemigroup& S);
  static Congruence universal(const FiniteInvSemigroup& S);

  int size() const { return part_.size(); }
  int num_blocks() const { return part_.num_blocks(); }
  int block_of(int x) const { return part_.block_of(x); }
  bool same(int x, int y) const { return part_.same_block(x, y); }
  const Partition& partition() const { return part_; }

  bool refines(const Congruence& other) const {
    return part_.refines(other.part_);
  }

  bool operator==(const Congruence& o) const { return part_ == o.part_; }
  bool operator!=(const Congruence& o) const { return part_ != o.part_; }
  bool operator<(const Congruence& o) const { return part_ < o.part_; }

 private:
  explicit Congruence(Partition p) : part_(std::move(p)) {}
  Partition part_;
};

// smallest congruence identifying a and b
Congruence principal_congruence(const FiniteInvSemigroup& S, int a, int b);

// join in the congruence lattice (transitive closure of the union)
Congruence join_congruences(const FiniteInvSemigroup& S, const Congruence& x,
                            const Congruence& y);

// The full congruence lattice, found by closing the principal congruences
// under joins.  Sorted canonically; refuses hosts larger than the cap.
std::vector<Congruence> enumerate_congruences(const FiniteInvSemigroup& S,
                                              int cap = 12);

// minimum group congruence: s ≡ t iff some u lies below both
Congruence sigma(const FiniteInvSemigroup& S);

// maximum idempotent-separating congruence:
// s ≡ t iff ses⁻¹ = tet⁻¹ for every idempotent e
Congruence mu(const FiniteInvSemigroup& S);

// syntactic congruence of {0}: s ≡ t iff asb = 0 exactly when atb = 0;
// requires a zero
Congruence xi(const FiniteInvSemigroup& S);

FiniteInvSemigroup quotient(const FiniteInvSemigroup& S, const Congruence& rho);

// quotient by sigma, verified to be a group
FiniteInvSemigroup max_group_image(const FiniteInvSemigroup& S);

struct ReesQuotient {
  FiniteInvSemigroup semigroup;
  std::vector<int> map;  // old index -> new index; the ideal maps to the zero
};

// collapses a two-sided ideal to a zero
ReesQuotient rees_quotient(const FiniteInvSemigroup& S,
                           const std::vector<int>& ideal);

// Full inverse subsemigroup closed under conjugation.  "Full" means it
// contains every idempotent.
struct NormalSubsemigroup {
  std::vector<int> elements;  // sorted
  bool contains(int x) const;
};

NormalSubsemigroup make_normal_subsemigroup(const FiniteInvSemigroup& S,
                                            std::vector<int> elements);

// Z(E(S)): everything commuting with all idempotents; always normal, and
// always a Clifford subsemigroup
NormalSubsemigroup centralizer_of_idempotents(const FiniteInvSemigroup& S);

// The idempotent-separating congruence with kernel K:
// s ≡ t iff st⁻¹ ∈ K and d(s) = d(t).  Requires K normal and central
// (K ⊆ Z(E(S))); the kernel of the result is verified to be K.
Congruence congruence_from_kernel(const FiniteInvSemigroup& S,
                                  const NormalSubsemigroup& K);

// elements whose block contains an idempotent, for any congruence
NormalSubsemigroup kernel_subsemigroup(const FiniteInvSemigroup& S,
                                       const Congruence& rho);

bool is_idempotent_separating(const FiniteInvSemigroup& S,
                              const Congruence& rho);
bool is_idempotent_pure(const FiniteInvSemigroup& S, const Congruence& rho);
// requires a zero: the zero's block is a singleton
bool is_zero_restricted(const FiniteInvSemigroup& S, const Congruence& rho);

// Z(E(S)) = E(S)
bool is_fundamental(const FiniteInvSemigroup& S);

// xi is equality; requires a zero
bool is_zero_disjunctive(const FiniteInvSemigroup& S);

// Only ideals are {0} and S.  Computed both from the J-classes and from
// the idempotent criterion (each nonzero idempotent pair linked through a
// D-related idempotent below); the two must agree.  Requires a zero.
bool is_zero_simple(const FiniteInvSemigroup& S);

// fundamental, 0-simple, and E(S) is 0-disjunctive; cross-checked against
// the full congruence count when the order is within the enumeration cap
bool is_congruence_free(const FiniteInvSemigroup& S, int enumeration_cap = 12);

}  // namespace iskit

#endif
