#ifndef ISKIT_CONSTRUCTIONS_HPP
#define ISKIT_CONSTRUCTIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "iskit/homomorphism.hpp"
#include "iskit/inverse_semigroup.hpp"
#include "iskit/semilattice.hpp"

namespace iskit {

// Finite groupoid: partial composition x·y defined exactly when
// dom(x) = ran(y), with explicit identities and inverses.
struct FiniteGroupoid {
  int size = 0;
  std::vector<char> identity;
  std::vector<int> dom, ran;  // indices of identity arrows
  std::vector<int> inv;
  std::vector<int> comp;  // size×size, -1 where undefined
  std::vector<std::string> labels;

  bool composable(int x, int y) const { return dom[x] == ran[y]; }
  int compose(int x, int y) const {
    return comp[static_cast<size_t>(x) * size + y];
  }
};

// validates identity behavior, the definedness pattern, associativity of
// defined triples and the inverse laws
FiniteGroupoid make_groupoid(int size, std::vector<char> identity,
                             std::vector<int> dom, std::vector<int> ran,
                             std::vector<int> inv, std::vector<int> comp,
                             std::vector<std::string> labels = {});

// arrows (a, b) on n objects with (a,b)·(b,c) = (a,c)
FiniteGroupoid pair_groupoid(int n);

// the restricted product structure on a subset of S that is closed under
// d, r, inverses and all defined restricted products
FiniteGroupoid groupoid_from_subset(const FiniteInvSemigroup& S,
                                    const std::vector<int>& subset);

// undefined compositions become a new zero; the result's natural order is
// equality off the zero, which is verified
FiniteInvSemigroup adjoin_zero(const FiniteGroupoid& G);

// Semilattice-indexed family of groups with restriction maps downward;
// restrictions compose and restrict identically at the top.
struct PresheafOfGroups {
  SemilatticePoset base;
  std::vector<FiniteInvSemigroup> groups;
  // restriction[e][f], nonempty exactly when f ≤ e, maps G_e -> G_f
  std::vector<std::vector<std::vector<int>>> restriction;
};

PresheafOfGroups make_presheaf(SemilatticePoset base,
                               std::vector<FiniteInvSemigroup> groups,
                               std::vector<std::vector<std::vector<int>>>
                                   restriction);

// union of the groups with products taken at the meet; always Clifford
FiniteInvSemigroup clifford_from_presheaf(const PresheafOfGroups& P);

// splits a Clifford semigroup into its maximal subgroups over E(S), with
// restriction maps a ↦ af
PresheafOfGroups presheaf_from_clifford(const FiniteInvSemigroup& S);

// Group acting on a semilattice by order automorphisms.
struct SemilatticeGroupAction {
  FiniteInvSemigroup group;
  SemilatticePoset lattice;
  std::vector<std::vector<int>> act;  // [group element][point] -> point
};

SemilatticeGroupAction make_semilattice_group_action(
    FiniteInvSemigroup group, SemilatticePoset lattice,
    std::vector<std::vector<int>> act);

// pairs (e, g) with (e,g)(f,h) = (e ∧ g·f, gh); always E-unitary, with
// idempotents (e, 1) and the order (e,g) ≤ (f,h) iff e ≤ f and g = h
FiniteInvSemigroup semidirect_product(const SemilatticeGroupAction& act);

struct SemidirectWitness {
  SemilatticeGroupAction action;
  FiniteInvSemigroup product;
  std::vector<int> isomorphism;  // S index -> product index
};

// Six independent tests for being a semidirect product of a semilattice by
// a group; they must agree.  When they hold, an explicit isomorphism is
// produced from the range pairing a ↦ (aa⁻¹, class of a).
struct SemidirectRecognition {
  bool has_zero = false;
  bool by_isomorphism_search = false;
  bool by_unitary_cover = false;       // E-unitary and compatible covers
  bool by_min_group_star_bijective = false;
  bool by_some_group_star_bijective = false;
  bool by_domain_pairing = false;      // a ↦ (a⁻¹a, class) bijective
  bool by_range_pairing = false;       // a ↦ (aa⁻¹, class) bijective
  std::optional<SemidirectWitness> witness;

  bool recognized() const { return by_range_pairing; }
};

SemidirectRecognition semidirect_recognition(const FiniteInvSemigroup& S);

}  // namespace iskit

#endif
