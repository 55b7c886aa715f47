#include "iskit/action.hpp"

#include <algorithm>

#include "iskit/errors.hpp"

namespace iskit {

Action make_action(const FiniteInvSemigroup& S,
                   std::vector<std::vector<int>> table) {
  int m = S.order();
  if (static_cast<int>(table.size()) != m)
    throw InvalidInputError("action table must have one row per element");
  if (table.empty() || table[0].empty())
    throw InvalidInputError("action needs at least one point");
  int X = static_cast<int>(table[0].size());
  Action A{X, std::move(table)};
  for (const auto& row : A.table) {
    if (static_cast<int>(row.size()) != X)
      throw InvalidInputError("action rows have unequal lengths");
    for (int v : row)
      if (v != Action::kUndefinedPoint && (v < 0 || v >= X))
        throw InvalidInputError("action image out of range");
  }

  for (int e : S.idempotents())
    for (int x = 0; x < X; ++x)
      if (A.defined(e, x) && A.apply(e, x) != x)
        throw InvalidInputError("idempotent moves a point it acts on");

  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int st = S.product(s, t);
      for (int x = 0; x < X; ++x) {
        int via_t = A.table[t][x];
        int chained = via_t == Action::kUndefinedPoint
                          ? Action::kUndefinedPoint
                          : A.table[s][via_t];
        if (chained != A.table[st][x])
          throw InvalidInputError(
              "action is not compatible with the product");
      }
    }

  if (S.zero()) {
    for (int x = 0; x < X; ++x)
      if (A.defined(*S.zero(), x))
        throw InvalidInputError("the zero must act nowhere");
  }
  return A;
}

Action natural_action(const FiniteInvSemigroup& S) {
  if (!S.has_maps())
    throw InvalidInputError(
        "natural action requires concrete partial bijections");
  int X = S.maps().front().carrier_size();
  std::vector<std::vector<int>> table(S.order(), std::vector<int>(X));
  for (int s = 0; s < S.order(); ++s)
    for (int x = 0; x < X; ++x) table[s][x] = S.maps()[s].apply(x);
  return make_action(S, std::move(table));
}

Partition orbits(const FiniteInvSemigroup& S, const Action& A) {
  UnionFind uf(A.num_points);
  for (int s = 0; s < S.order(); ++s)
    for (int x = 0; x < A.num_points; ++x)
      if (A.defined(s, x)) uf.unite(x, A.apply(s, x));
  return Partition::from_union_find(uf);
}

bool is_transitive(const FiniteInvSemigroup& S, const Action& A) {
  return orbits(S, A).num_blocks() == 1;
}

bool is_effective(const Action& A) {
  for (int x = 0; x < A.num_points; ++x) {
    bool moved = false;
    for (const auto& row : A.table)
      if (row[x] != Action::kUndefinedPoint) { moved = true; break; }
    if (!moved) return false;
  }
  return true;
}

std::vector<int> stabilizer(const FiniteInvSemigroup& S, const Action& A,
                            int x) {
  if (x < 0 || x >= A.num_points)
    throw InvalidInputError("base point out of range");
  std::vector<int> H;
  for (int s = 0; s < S.order(); ++s)
    if (A.defined(s, x) && A.apply(s, x) == x) H.push_back(s);
  if (!is_closed_inverse_subsemigroup(S, H) ||
      (S.zero() && std::binary_search(H.begin(), H.end(), *S.zero())))
    throw InternalCheckError("stabilizer is not a proper closed subsemigroup");
  return H;
}

bool is_closed_inverse_subsemigroup(const FiniteInvSemigroup& S,
                                    const std::vector<int>& H) {
  if (H.empty()) return false;
  auto in = [&](int x) { return std::binary_search(H.begin(), H.end(), x); };
  for (int h : H) {
    if (h < 0 || h >= S.order())
      throw InvalidInputError("element index out of range");
    if (!in(S.inverse(h))) return false;
    for (int k : H)
      if (!in(S.product(h, k))) return false;
    for (int t = 0; t < S.order(); ++t)
      if (S.leq(h, t) && !in(t)) return false;
  }
  return true;
}

bool is_proper_closed_inverse_subsemigroup(const FiniteInvSemigroup& S,
                                           const std::vector<int>& H) {
  if (!is_closed_inverse_subsemigroup(S, H)) return false;
  if (S.zero() &&
      std::binary_search(H.begin(), H.end(), *S.zero()))
    return false;
  return true;
}

std::vector<int> closed_inverse_subsemigroup_generated(
    const FiniteInvSemigroup& S, const std::vector<int>& gens) {
  std::vector<int> current = inverse_subsemigroup_generated(S, gens);
  // the upward closure of an inverse subsemigroup is again closed under
  // products and inverses, so one rising pass suffices
  current = upward_closure(S, current);
  if (!is_closed_inverse_subsemigroup(S, current))
    throw InternalCheckError("closure failed to stabilize");
  return current;
}

CosetSpace coset_space(const FiniteInvSemigroup& S, const std::vector<int>& H) {
  if (!is_proper_closed_inverse_subsemigroup(S, H))
    throw InvalidInputError(
        "cosets need a proper closed inverse subsemigroup");
  auto in_H = [&](int x) { return std::binary_search(H.begin(), H.end(), x); };

  CosetSpace cs;
  for (int s = 0; s < S.order(); ++s) {
    if (!in_H(S.d(s))) continue;
    bool fresh = true;
    for (int rep : cs.reps)
      if (in_H(S.product(S.inverse(s), rep))) { fresh = false; break; }
    if (!fresh) continue;
    std::vector<int> sH;
    for (int h : H) sH.push_back(S.product(s, h));
    std::vector<int> coset = upward_closure(S, sH);
    cs.cosets.push_back(std::move(coset));
    cs.reps.push_back(s);
  }

  for (size_t i = 0; i < cs.cosets.size(); ++i)
    for (size_t j = i + 1; j < cs.cosets.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(cs.cosets[i].begin(), cs.cosets[i].end(),
                            cs.cosets[j].begin(), cs.cosets[j].end(),
                            std::back_inserter(common));
      if (!common.empty())
        throw InternalCheckError("distinct cosets intersect");
    }

  bool has_H = false;
  for (const auto& c : cs.cosets) has_H = has_H || c == H;
  if (!has_H)
    throw InternalCheckError("the subsemigroup itself is not a coset");
  return cs;
}

Action coset_action(const FiniteInvSemigroup& S, const std::vector<int>& H,
                    const CosetSpace& cs) {
  auto in_H = [&](int x) { return std::binary_search(H.begin(), H.end(), x); };
  int k = static_cast<int>(cs.cosets.size());
  std::vector<std::vector<int>> table(S.order(),
                                      std::vector<int>(k, Action::kUndefinedPoint));
  for (int a = 0; a < S.order(); ++a)
    for (int j = 0; j < k; ++j) {
      int as = S.product(a, cs.reps[j]);
      if (!in_H(S.d(as))) continue;
      int target = -1;
      for (int i = 0; i < k; ++i)
        if (in_H(S.product(S.inverse(as), cs.reps[i]))) { target = i; break; }
      if (target == -1)
        throw InternalCheckError("translated coset not found");
      table[a][j] = target;
    }
  Action A = make_action(S, std::move(table));
  if (!is_transitive(S, A))
    throw InternalCheckError("coset action is not transitive");
  return A;
}

ActionEquivalence canonical_equivalence(const FiniteInvSemigroup& S,
                                        const Action& A, int x) {
  if (!is_transitive(S, A))
    throw InvalidInputError("canonical equivalence needs a transitive action");
  if (!is_effective(A))
    throw InvalidInputError("canonical equivalence needs an effective action");
  std::vector<int> H = stabilizer(S, A, x);
  ActionEquivalence eq;
  eq.cosets = coset_space(S, H);
  eq.target = coset_action(S, H, eq.cosets);

  eq.point_to_coset.assign(A.num_points, -1);
  for (int y = 0; y < A.num_points; ++y) {
    std::vector<int> movers;
    for (int s = 0; s < S.order(); ++s)
      if (A.defined(s, x) && A.apply(s, x) == y) movers.push_back(s);
    if (movers.empty())
      throw InternalCheckError("transitive action misses a point");
    int found = -1;
    for (size_t i = 0; i < eq.cosets.cosets.size(); ++i)
      if (eq.cosets.cosets[i] == movers) { found = static_cast<int>(i); break; }
    if (found == -1)
      throw InternalCheckError("mover set of a point is not a coset");
    eq.point_to_coset[y] = found;
  }

  std::vector<char> hit(eq.cosets.cosets.size(), 0);
  for (int v : eq.point_to_coset) {
    if (v == -1 || hit[v])
      throw InternalCheckError("point-to-coset map is not a bijection");
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw InternalCheckError("point-to-coset map is not onto");

  for (int s = 0; s < S.order(); ++s)
    for (int y = 0; y < A.num_points; ++y) {
      int lhs = A.table[s][y];
      int rhs = eq.target.table[s][eq.point_to_coset[y]];
      int lhs_mapped = lhs == Action::kUndefinedPoint
                           ? Action::kUndefinedPoint
                           : eq.point_to_coset[lhs];
      if (lhs_mapped != rhs)
        throw InternalCheckError("equivalence does not intertwine the actions");
    }
  return eq;
}

std::optional<int> are_conjugate(const FiniteInvSemigroup& S,
                                 const std::vector<int>& H,
                                 const std::vector<int>& K) {
  if (!is_proper_closed_inverse_subsemigroup(S, H) ||
      !is_proper_closed_inverse_subsemigroup(S, K))
    throw InvalidInputError("conjugacy needs proper closed subsemigroups");
  auto in_H = [&](int x) { return std::binary_search(H.begin(), H.end(), x); };
  auto in_K = [&](int x) { return std::binary_search(K.begin(), K.end(), x); };
  for (int s = 0; s < S.order(); ++s) {
    bool ok = true;
    for (int h : H)
      if (!in_K(S.product(S.product(s, h), S.inverse(s)))) { ok = false; break; }
    for (int kk : K) {
      if (!ok) break;
      if (!in_H(S.product(S.product(S.inverse(s), kk), s))) ok = false;
    }
    if (!ok) continue;

    // consequences of conjugacy, checked on the witness
    if (!in_K(S.r(s)) || !in_H(S.d(s)))
      throw InternalCheckError("conjugacy witness misses its idempotents");
    std::vector<int> sHs;
    for (int h : H) sHs.push_back(S.product(S.product(s, h), S.inverse(s)));
    if (upward_closure(S, sHs) != K)
      throw InternalCheckError("conjugate of H does not close up to K");
    std::vector<int> sKs;
    for (int kk : K) sKs.push_back(S.product(S.product(S.inverse(s), kk), s));
    if (upward_closure(S, sKs) != H)
      throw InternalCheckError("conjugate of K does not close up to H");
    return s;
  }
  return std::nullopt;
}

}  // namespace iskit
