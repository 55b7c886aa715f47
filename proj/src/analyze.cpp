#include "iskit/analyze.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "iskit/action.hpp"
#include "iskit/congruence.hpp"
#include "iskit/green.hpp"
#include "iskit/predicates.hpp"
#include "iskit/representations.hpp"

namespace iskit {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string analyze_report(const BuiltObject& obj, const BuildCaps& caps) {
  const FiniteInvSemigroup& S = obj.semigroup;
  bool zero = S.zero().has_value();
  GreenData G = green_relations(S);

  std::ostringstream out;
  out << "kind: " << kind_name(obj.kind) << '\n';
  out << "order: " << S.order() << '\n';
  out << "idempotents: " << S.idempotents().size() << '\n';
  out << "has-zero: " << yn(zero) << '\n';
  out << "has-identity: " << yn(S.identity().has_value()) << '\n';
  out << "l-classes: " << G.L.num_blocks() << '\n';
  out << "r-classes: " << G.R.num_blocks() << '\n';
  out << "h-classes: " << G.H.num_blocks() << '\n';
  out << "d-classes: " << G.D.num_blocks() << '\n';
  out << "j-classes: " << G.J.num_blocks() << '\n';

  std::vector<int> sizes;
  for (const auto& block : G.D.blocks())
    sizes.push_back(static_cast<int>(block.size()));
  std::sort(sizes.begin(), sizes.end());
  out << "d-class-sizes:";
  for (int s : sizes) out << ' ' << s;
  out << '\n';

  out << "is-group: " << yn(is_group(S)) << '\n';
  out << "is-semilattice: " << yn(is_semilattice(S)) << '\n';
  out << "is-clifford: " << yn(is_clifford(S)) << '\n';
  out << "is-e-unitary: " << yn(is_E_unitary(S)) << '\n';
  out << "is-e-star-unitary: " << yn(is_E_star_unitary(S)) << '\n';
  out << "is-fundamental: " << yn(is_fundamental(S)) << '\n';
  if (zero) {
    out << "is-groupoid-with-zero: " << yn(is_groupoid_with_zero(S)) << '\n';
    out << "is-zero-disjunctive: " << yn(is_zero_disjunctive(S)) << '\n';
    out << "is-zero-simple: " << yn(is_zero_simple(S)) << '\n';
    out << "is-congruence-free: "
        << yn(is_congruence_free(S, caps.max_congruence_order)) << '\n';
  } else {
    out << "is-groupoid-with-zero: n/a\n";
    out << "is-zero-disjunctive: n/a\n";
    out << "is-zero-simple: n/a\n";
    out << "is-congruence-free: n/a\n";
  }

  out << "sigma-classes: " << sigma(S).num_blocks() << '\n';
  out << "mu-classes: " << mu(S).num_blocks() << '\n';
  if (zero)
    out << "xi-classes: " << xi(S).num_blocks() << '\n';
  else
    out << "xi-classes: n/a\n";
  out << "munn-image-order: " << munn_representation(S).image.order() << '\n';

  if (obj.action) {
    const Action& A = *obj.action;
    out << "action-points: " << A.num_points << '\n';
    out << "action-orbits: " << orbits(S, A).num_blocks() << '\n';
    out << "action-transitive: " << yn(is_transitive(S, A)) << '\n';
    out << "action-effective: " << yn(is_effective(A)) << '\n';
  }
  return out.str();
}

}  // namespace iskit
