#ifndef ISKIT_INVERSE_SEMIGROUP_HPP
#define ISKIT_INVERSE_SEMIGROUP_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iskit/partial_bijection.hpp"
#include "iskit/relation.hpp"

namespace iskit {

struct ValidationOptions {
  // table sizes up to this get exhaustive axiom scans; larger ones are
  // spot-checked with a fixed-seed sample
  int exhaustive_limit = 60;
  int sample_count = 50000;
  uint64_t sample_seed = 0x5eedf00dULL;
};

// Finite inverse semigroup on elements {0, ..., m-1}, given by its full
// multiplication table.  Immutable once built; every query is const.
class FiniteInvSemigroup {
 public:
  int order() const { return m_; }
  int product(int a, int b) const { return product_[static_cast<size_t>(a) * m_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  bool is_idempotent(int a) const { return idempotent_[a] != 0; }
  const std::vector<int>& idempotents() const { return idempotents_; }

  // d(s) = s⁻¹s and r(s) = ss⁻¹, the domain and range idempotents
  int d(int s) const { return d_[s]; }
  int r(int s) const { return r_[s]; }

  std::optional<int> zero() const { return zero_; }
  std::optional<int> identity() const { return identity_; }

  // natural partial order: s ≤ t iff s = ts⁻¹s
  bool leq(int s, int t) const { return leq_.at(s, t); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  // concrete partial bijections realizing the elements, when known
  bool has_maps() const { return !maps_.empty(); }
  const std::vector<PartialBijection>& maps() const { return maps_; }

 private:
  FiniteInvSemigroup() = default;

  int m_ = 0;
  std::vector<int> product_;
  std::vector<int> inverse_;
  std::vector<char> idempotent_;
  std::vector<int> idempotents_;
  std::vector<int> d_, r_;
  std::optional<int> zero_;
  std::optional<int> identity_;
  Relation leq_;
  std::vector<std::string> labels_;
  std::vector<PartialBijection> maps_;

  friend FiniteInvSemigroup from_cayley_table(
      const std::vector<std::vector<int>>& table, std::vector<std::string> labels,
      std::vector<PartialBijection> maps, const ValidationOptions& opts);
};

// Validates associativity, regularity, uniqueness of inverses (equivalently
// commuting idempotents), then precomputes idempotents, d/r, zero/identity
// and the natural partial order.  The order is computed by all four of its
// characterizations, which must agree.
FiniteInvSemigroup from_cayley_table(
    const std::vector<std::vector<int>>& table,
    std::vector<std::string> labels = {},
    std::vector<PartialBijection> maps = {},
    const ValidationOptions& opts = {});

struct ClosureOptions {
  int max_carrier = 8;
  int max_elements = 100000;
  // one name per generator; defaults to a, b, c, ...
  std::vector<std::string> names = {};
  ValidationOptions validation = {};
};

// Closes the given partial bijections under composition and inversion.
// Elements are numbered breadth-first over length-lex generator words
// (the generator list is first augmented with any missing inverses), and
// labeled by the first word that reaches them.
FiniteInvSemigroup close_generators(const std::vector<PartialBijection>& gens,
                                    const ClosureOptions& opts = {});

// Builds a semigroup from a set of maps already closed under composition
// and inversion (for example a full symmetric inverse monoid).
FiniteInvSemigroup fis_from_maps(const std::vector<PartialBijection>& maps,
                                 std::vector<std::string> labels = {},
                                 const ValidationOptions& opts = {});

// s ≤ t iff s = ts⁻¹s, as a relation object
Relation natural_order(const FiniteInvSemigroup& S);

// s ~ t iff s⁻¹t and st⁻¹ are both idempotent
Relation compatibility(const FiniteInvSemigroup& S);

// s ⊥ t iff s⁻¹t = 0 = st⁻¹; requires a zero
Relation orthogonality(const FiniteInvSemigroup& S);

// greatest lower bound of {s, t} under the natural order, if it exists
std::optional<int> meet_elements(const FiniteInvSemigroup& S, int s, int t);

// st when d(s) = r(t), the groupoid composition
std::optional<int> restricted_product(const FiniteInvSemigroup& S, int s, int t);

// For any s, t: the unique pair (s', t') with s' ≤ s, t' ≤ t,
// d(s') = r(t') and s't' = st.  Returned as (s', t').
std::pair<int, int> restricted_factorization(const FiniteInvSemigroup& S,
                                             int s, int t);

std::vector<int> upward_closure(const FiniteInvSemigroup& S,
                                const std::vector<int>& subset);
std::vector<int> downward_closure(const FiniteInvSemigroup& S,
                                  const std::vector<int>& subset);

// smallest subset containing gens and closed under product and inverse
std::vector<int> inverse_subsemigroup_generated(const FiniteInvSemigroup& S,
                                                const std::vector<int>& gens);

}  // namespace iskit

#endif
