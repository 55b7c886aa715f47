#ifndef ISKIT_TESTS_FIXTURES_HPP
#define ISKIT_TESTS_FIXTURES_HPP

// In-memory builders for the small semigroups the tests keep returning to.

#include <string>
#include <vector>

#include "iskit/constructions.hpp"
#include "iskit/inverse_semigroup.hpp"
#include "iskit/partial_bijection.hpp"
#include "iskit/semilattice.hpp"

namespace fix {

using iskit::FiniteInvSemigroup;
using iskit::PartialBijection;

// the five-element closure of one nilpotent map on two points
inline FiniteInvSemigroup brandt2() {
  return iskit::close_generators(
      {PartialBijection::from_pairs(2, {{0, 1}})}, {.names = {"x"}});
}

inline FiniteInvSemigroup i2() {
  return iskit::close_generators(
      {PartialBijection::from_pairs(2, {{0, 1}, {1, 0}}),
       PartialBijection::from_pairs(2, {{0, 0}})},
      {.names = {"s", "e"}});
}

inline FiniteInvSemigroup i3() {
  return iskit::close_generators(
      {PartialBijection::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}),
       PartialBijection::from_pairs(3, {{0, 1}, {1, 0}, {2, 2}}),
       PartialBijection::from_pairs(3, {{1, 1}, {2, 2}})},
      {.names = {"c", "t", "e"}});
}

inline FiniteInvSemigroup trivial() {
  return iskit::from_cayley_table({{0}}, {"1"});
}

inline FiniteInvSemigroup z2() {
  return iskit::from_cayley_table({{0, 1}, {1, 0}}, {"1", "s"});
}

inline FiniteInvSemigroup z3() {
  return iskit::from_cayley_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
                                  {"1", "g", "h"});
}

inline FiniteInvSemigroup z4() {
  return iskit::from_cayley_table(
      {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}},
      {"1", "g", "g2", "g3"});
}

inline FiniteInvSemigroup chain2() {
  return iskit::from_cayley_table({{0, 0}, {0, 1}}, {"0", "e"});
}

inline FiniteInvSemigroup chain3() {
  return iskit::from_cayley_table({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                                  {"0", "f", "e"});
}

inline FiniteInvSemigroup diamond() {
  return iskit::from_cayley_table({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}},
                                  {"0", "a", "b"});
}

inline FiniteInvSemigroup bool4() {
  return iskit::from_cayley_table(
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
      {"0", "a", "b", "1"});
}

inline iskit::SemilatticePoset chain2_lattice() {
  return iskit::make_semilattice({{0, 0}, {0, 1}}, {"f", "e"});
}

inline iskit::SemilatticePoset chain3_lattice() {
  return iskit::make_semilattice({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}},
                                 {"b", "f", "e"});
}

inline iskit::SemilatticePoset diamond_lattice() {
  return iskit::make_semilattice({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}},
                                 {"bot", "a", "b"});
}

inline iskit::SemilatticePoset bool4_lattice() {
  return iskit::make_semilattice(
      {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}},
      {"0", "a", "b", "1"});
}

// two-element group on top of a chain, flip collapsed by restriction
inline iskit::PresheafOfGroups presheaf_clifford3() {
  return iskit::make_presheaf(chain2_lattice(), {trivial(), z2()},
                              {{{0}, {}}, {{0, 0}, {0, 1}}});
}

inline FiniteInvSemigroup clifford3() {
  return iskit::clifford_from_presheaf(presheaf_clifford3());
}

// two-element groups on both chain nodes, restriction an isomorphism
inline iskit::PresheafOfGroups presheaf_z2z2_id() {
  return iskit::make_presheaf(chain2_lattice(), {z2(), z2()},
                              {{{0, 1}, {}}, {{0, 1}, {0, 1}}});
}

inline FiniteInvSemigroup clifford_z2z2_id() {
  return iskit::clifford_from_presheaf(presheaf_z2z2_id());
}

// two-element groups on both chain nodes, restriction collapses
inline iskit::PresheafOfGroups presheaf_z2z2_const() {
  return iskit::make_presheaf(chain2_lattice(), {z2(), z2()},
                              {{{0, 1}, {}}, {{0, 0}, {0, 1}}});
}

inline FiniteInvSemigroup clifford_z2z2_const() {
  return iskit::clifford_from_presheaf(presheaf_z2z2_const());
}

// diamond base; the group over one atom restricts isomorphically to the
// bottom: Clifford, without zero, and not a semidirect product
inline iskit::PresheafOfGroups presheaf_diamond5() {
  return iskit::make_presheaf(
      diamond_lattice(), {z2(), z2(), trivial()},
      {{{0, 1}, {}, {}}, {{0, 1}, {0, 1}, {}}, {{0}, {}, {0}}});
}

inline FiniteInvSemigroup clifford_diamond5() {
  return iskit::clifford_from_presheaf(presheaf_diamond5());
}

// three-node chain with a trivial middle group, forcing constant composites
inline iskit::PresheafOfGroups presheaf_chain3() {
  return iskit::make_presheaf(
      chain3_lattice(), {z2(), trivial(), z2()},
      {{{0, 1}, {}, {}}, {{0}, {0}, {}}, {{0, 0}, {0, 0}, {0, 1}}});
}

inline FiniteInvSemigroup clifford_chain3() {
  return iskit::clifford_from_presheaf(presheaf_chain3());
}

// the two-element group swapping the atoms of a diamond
inline iskit::SemilatticeGroupAction swap_action() {
  return iskit::make_semilattice_group_action(z2(), diamond_lattice(),
                                              {{0, 1, 2}, {0, 2, 1}});
}

inline FiniteInvSemigroup semidirect6() {
  return iskit::semidirect_product(swap_action());
}

inline FiniteInvSemigroup pair2_zero() {
  return iskit::adjoin_zero(iskit::pair_groupoid(2));
}

struct Named {
  std::string name;
  FiniteInvSemigroup S;
};

// the shared desk-scale corpus: every semigroup the property suites sweep
inline const std::vector<Named>& standard() {
  static const std::vector<Named> all = {
      {"trivial", trivial()},
      {"brandt2", brandt2()},
      {"i2", i2()},
      {"i3", i3()},
      {"z2", z2()},
      {"z3", z3()},
      {"z4", z4()},
      {"chain2", chain2()},
      {"chain3", chain3()},
      {"diamond", diamond()},
      {"bool4", bool4()},
      {"clifford3", clifford3()},
      {"clifford_z2z2_id", clifford_z2z2_id()},
      {"clifford_z2z2_const", clifford_z2z2_const()},
      {"clifford_diamond5", clifford_diamond5()},
      {"clifford_chain3", clifford_chain3()},
      {"semidirect6", semidirect6()},
      {"pair2_zero", pair2_zero()},
  };
  return all;
}

}  // namespace fix

#endif
