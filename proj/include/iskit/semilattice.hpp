#ifndef ISKIT_SEMILATTICE_HPP
#define ISKIT_SEMILATTICE_HPP

#include <string>
#include <vector>

#include "iskit/inverse_semigroup.hpp"
#include "iskit/relation.hpp"

namespace iskit {

// Finite meet-semilattice on points {0, ..., n-1}.  The bottom element
// always exists and plays the role of the zero.
class SemilatticePoset {
 public:
  int size() const { return n_; }
  int meet(int e, int f) const { return meet_[static_cast<size_t>(e) * n_ + f]; }
  bool leq(int e, int f) const { return meet(e, f) == e; }
  int bottom() const { return bottom_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }

  // {f : f ≤ e}, sorted
  std::vector<int> principal_ideal(int e) const;

 private:
  SemilatticePoset() = default;
  int n_ = 0;
  std::vector<int> meet_;
  int bottom_ = 0;
  std::vector<std::string> labels_;

  friend SemilatticePoset make_semilattice(
      const std::vector<std::vector<int>>& meet_table,
      std::vector<std::string> labels);
};

// validates idempotency, commutativity and associativity of the meet
SemilatticePoset make_semilattice(const std::vector<std::vector<int>>& meet_table,
                                  std::vector<std::string> labels = {});

struct IdempotentSemilattice {
  SemilatticePoset lattice;
  std::vector<int> element_of_point;  // point -> index in S
  std::vector<int> point_of_element;  // index in S -> point, or -1
};

// the idempotents of S under multiplication, as a semilattice
IdempotentSemilattice semilattice_of_idempotents(const FiniteInvSemigroup& S);

// e ≡ f iff they meet the same elements at the bottom:
// for all i, i∧e = 0 exactly when i∧f = 0
Partition syntactic_zero_partition(const SemilatticePoset& E);

// Checks all three equivalent forms: the syntactic partition of the zero is
// equality; distinct nonzero elements are separated by some g meeting one
// but not the other at zero; and below any e, every smaller nonzero f has a
// nonzero complement g ≤ e with f∧g = 0.  The forms must agree.
bool is_zero_disjunctive_semilattice(const SemilatticePoset& E);

}  // namespace iskit

#endif
