#ifndef ISKIT_REPRESENTATIONS_HPP
#define ISKIT_REPRESENTATIONS_HPP

#include <string>
#include <vector>

#include "iskit/congruence.hpp"
#include "iskit/inverse_semigroup.hpp"
#include "iskit/semilattice.hpp"

namespace iskit {

struct WagnerPrestonRep {
  // one partial bijection on {0, ..., |S|-1} per element: x ↦ ax on the
  // domain d(a)S
  std::vector<PartialBijection> images;
};

// The regular representation by partial bijections of the carrier.
// Verified injective and product-preserving (exhaustively up to the
// validation limit, sampled beyond).
WagnerPrestonRep wagner_preston(const FiniteInvSemigroup& S,
                                const ValidationOptions& opts = {});

// All order isomorphisms between principal ideals of E, as partial
// bijections of E's points.  Ideal pairs are visited sorted by
// (size, top element), so the numbering is reproducible.
FiniteInvSemigroup munn_semigroup(const SemilatticePoset& E, int cap = 8);

struct MunnRep {
  IdempotentSemilattice base;
  // delta[s]: e ↦ ses⁻¹ on the points of the idempotent semilattice,
  // defined on the ideal below d(s)
  std::vector<PartialBijection> delta;
  FiniteInvSemigroup image;
  std::vector<int> to_image;  // S index -> image index
};

// The representation by conjugation on idempotents.  Each delta is checked
// to be an order isomorphism between principal ideals, the image is built
// and checked wide (it contains every identity map of a principal ideal).
MunnRep munn_representation(const FiniteInvSemigroup& S);

// Viewing the idempotent points as a T0 space with the principal ideals as
// a base, the image of the conjugation representation acts by bijections
// between base sets.  Requires a fundamental host.
struct SpaceRealizationReport {
  int base_set_count = 0;
  bool base_covers = false;
  bool base_meet_closed = false;
  bool points_separated = false;   // T0: some base set splits each pair
  bool domains_are_base = false;   // domains of image elements = base sets
  bool open_bijections = false;    // images of base subsets are open

  bool pass() const {
    return base_covers && base_meet_closed && points_separated &&
           domains_are_base && open_bijections;
  }
  std::string summary() const;
};

SpaceRealizationReport t0_realization_check(const FiniteInvSemigroup& S);

// S as an extension: the centralizer of idempotents (a Clifford kernel)
// together with the fundamental image under conjugation.
struct ExtensionDecomposition {
  NormalSubsemigroup kernel;
  FiniteInvSemigroup fundamental_image;
  std::vector<int> projection;  // S index -> image index
};

ExtensionDecomposition extension_decomposition(const FiniteInvSemigroup& S);

}  // namespace iskit

#endif
