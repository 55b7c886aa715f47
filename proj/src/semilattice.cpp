#include "iskit/semilattice.hpp"

#include "iskit/errors.hpp"

namespace iskit {

std::vector<int> SemilatticePoset::principal_ideal(int e) const {
  std::vector<int> out;
  for (int f = 0; f < n_; ++f)
    if (leq(f, e)) out.push_back(f);
  return out;
}

SemilatticePoset make_semilattice(const std::vector<std::vector<int>>& meet_table,
                                  std::vector<std::string> labels) {
  int n = static_cast<int>(meet_table.size());
  if (n == 0) throw InvalidInputError("empty meet table");
  for (const auto& row : meet_table) {
    if (static_cast<int>(row.size()) != n)
      throw InvalidInputError("meet table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw InvalidInputError("meet entry out of range");
  }
  for (int e = 0; e < n; ++e)
    if (meet_table[e][e] != e)
      throw InvalidInputError("meet is not idempotent");
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      if (meet_table[e][f] != meet_table[f][e])
        throw InvalidInputError("meet is not commutative");
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      for (int g = 0; g < n; ++g)
        if (meet_table[meet_table[e][f]][g] != meet_table[e][meet_table[f][g]])
          throw InvalidInputError("meet is not associative");

  SemilatticePoset E;
  E.n_ = n;
  E.meet_.resize(static_cast<size_t>(n) * n);
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f)
      E.meet_[static_cast<size_t>(e) * n + f] = meet_table[e][f];
  int bottom = 0;
  for (int e = 1; e < n; ++e) bottom = meet_table[bottom][e];
  E.bottom_ = bottom;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  if (static_cast<int>(labels.size()) != n)
    throw InvalidInputError("label count does not match meet table");
  E.labels_ = std::move(labels);
  return E;
}

IdempotentSemilattice semilattice_of_idempotents(const FiniteInvSemigroup& S) {
  const auto& idem = S.idempotents();
  int n = static_cast<int>(idem.size());
  std::vector<int> point_of_element(S.order(), -1);
  for (int p = 0; p < n; ++p) point_of_element[idem[p]] = p;
  std::vector<std::vector<int>> meet(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      meet[i][j] = point_of_element[S.product(idem[i], idem[j])];
  std::vector<std::string> labels;
  for (int e : idem) labels.push_back(S.label(e));
  return IdempotentSemilattice{make_semilattice(meet, std::move(labels)), idem,
                               std::move(point_of_element)};
}

Partition syntactic_zero_partition(const SemilatticePoset& E) {
  int n = E.size();
  int z = E.bottom();
  // signature of e: the set {i : i∧e = bottom}
  std::vector<std::vector<char>> sig(n, std::vector<char>(n));
  for (int e = 0; e < n; ++e)
    for (int i = 0; i < n; ++i) sig[e][i] = E.meet(i, e) == z ? 1 : 0;
  std::vector<int> block(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if (block[e] != -1) continue;
    block[e] = next;
    for (int f = e + 1; f < n; ++f)
      if (block[f] == -1 && sig[f] == sig[e]) block[f] = next;
    ++next;
  }
  return Partition::from_block_ids(std::move(block));
}

bool is_zero_disjunctive_semilattice(const SemilatticePoset& E) {
  int n = E.size();
  int z = E.bottom();

  bool form1 = syntactic_zero_partition(E).num_blocks() == n;

  bool form2 = true;
  for (int e = 0; e < n && form2; ++e)
    for (int f = e + 1; f < n && form2; ++f) {
      if (e == z || f == z) continue;
      bool separated = false;
      for (int g = 0; g < n; ++g) {
        bool ge = E.meet(g, e) == z;
        bool gf = E.meet(g, f) == z;
        if (ge != gf) { separated = true; break; }
      }
      form2 = separated;
    }

  bool form3 = true;
  for (int e = 0; e < n && form3; ++e)
    for (int f = 0; f < n && form3; ++f) {
      if (f == z || f == e || !E.leq(f, e)) continue;
      bool found = false;
      for (int g = 0; g < n; ++g) {
        if (g == z || !E.leq(g, e)) continue;
        if (E.meet(f, g) == z) { found = true; break; }
      }
      form3 = found;
    }

  if (form1 != form2 || form1 != form3)
    throw InternalCheckError("zero-disjunctive characterizations disagree");
  return form1;
}

}  // namespace iskit
