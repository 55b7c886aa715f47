#ifndef ISKIT_ACTION_HPP
#define ISKIT_ACTION_HPP

#include <optional>
#include <vector>

#include "iskit/inverse_semigroup.hpp"
#include "iskit/relation.hpp"

namespace iskit {

// Partial action of a semigroup on a point set: table[s][x] is the image
// point, or kUndefinedPoint when s does not move x.
struct Action {
  static constexpr int kUndefinedPoint = -1;
  int num_points = 0;
  std::vector<std::vector<int>> table;  // |S| rows

  bool defined(int s, int x) const { return table[s][x] != kUndefinedPoint; }
  int apply(int s, int x) const { return table[s][x]; }
};

// Validates: idempotents fix the points they move; s·(t·x) exists exactly
// when (st)·x does and they agree; a zero, when present, acts nowhere.
// Effectiveness (every point in some domain) is reported, not required.
Action make_action(const FiniteInvSemigroup& S,
                   std::vector<std::vector<int>> table);

// the semigroup's own partial bijections acting on their carrier
Action natural_action(const FiniteInvSemigroup& S);

// x ~ y iff some s·x = y; with effectiveness this is an equivalence
Partition orbits(const FiniteInvSemigroup& S, const Action& A);

bool is_transitive(const FiniteInvSemigroup& S, const Action& A);
// every point lies in the domain of some element's partial map
bool is_effective(const Action& A);

// {s : s·x = x}; verified upward closed, inverse closed, zero free
std::vector<int> stabilizer(const FiniteInvSemigroup& S, const Action& A,
                            int x);

// closed inverse subsemigroup test: product/inverse/upward closed; proper
// additionally means the zero stays outside
bool is_closed_inverse_subsemigroup(const FiniteInvSemigroup& S,
                                    const std::vector<int>& H);
bool is_proper_closed_inverse_subsemigroup(const FiniteInvSemigroup& S,
                                           const std::vector<int>& H);

// smallest closed inverse subsemigroup containing the given elements
std::vector<int> closed_inverse_subsemigroup_generated(
    const FiniteInvSemigroup& S, const std::vector<int>& gens);

struct CosetSpace {
  std::vector<std::vector<int>> cosets;  // sorted element sets
  std::vector<int> reps;                 // one representative each
};

// All (sH)↑ for d(s) ∈ H, deduplicated via the membership test s⁻¹t ∈ H
// and verified pairwise disjoint; H itself appears as a coset.
CosetSpace coset_space(const FiniteInvSemigroup& S, const std::vector<int>& H);

// a·(sH)↑ = (asH)↑ when d(as) ∈ H; always transitive
Action coset_action(const FiniteInvSemigroup& S, const std::vector<int>& H,
                    const CosetSpace& cs);

struct ActionEquivalence {
  CosetSpace cosets;
  Action target;                 // the coset action
  std::vector<int> point_to_coset;
};

// For a transitive action and a base point, the bijection y ↦ {s : s·x = y}
// onto the cosets of the stabilizer, compatible with both actions.
ActionEquivalence canonical_equivalence(const FiniteInvSemigroup& S,
                                        const Action& A, int x);

// witness s with sHs⁻¹ ⊆ K and s⁻¹Ks ⊆ H, if one exists
std::optional<int> are_conjugate(const FiniteInvSemigroup& S,
                                 const std::vector<int>& H,
                                 const std::vector<int>& K);

}  // namespace iskit

#endif
