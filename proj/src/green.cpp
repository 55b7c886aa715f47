#include "iskit/green.hpp"

#include <algorithm>

#include "iskit/errors.hpp"

namespace iskit {

GroupoidView groupoid_view(const FiniteInvSemigroup& S) {
  int m = S.order();
  GroupoidView G;
  G.identities = S.idempotents();
  G.dom.resize(m);
  G.ran.resize(m);
  for (int s = 0; s < m; ++s) {
    G.dom[s] = S.d(s);
    G.ran[s] = S.r(s);
  }

  auto defined = [&](int x, int y) { return S.d(x) == S.r(y); };

  // existence matching and association for triples
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      bool xy = defined(x, y);
      for (int z = 0; z < m; ++z) {
        bool yz = defined(y, z);
        bool left = xy && defined(S.product(x, y), z);
        bool right = yz && defined(x, S.product(y, z));
        bool both = xy && yz;
        if (left != right || left != both)
          throw InternalCheckError("groupoid existence axiom failed");
        if (left && S.product(S.product(x, y), z) != S.product(x, S.product(y, z)))
          throw InternalCheckError("groupoid association failed");
      }
    }

  // local identities: x·d(x) = x = r(x)·x, and identities behave as such
  for (int x = 0; x < m; ++x) {
    if (S.product(x, S.d(x)) != x || S.product(S.r(x), x) != x)
      throw InternalCheckError("groupoid identity axiom failed");
  }
  for (int e : G.identities)
    if (S.d(e) != e || S.r(e) != e)
      throw InternalCheckError("idempotent is not a groupoid identity");

  UnionFind uf(m);
  for (int s = 0; s < m; ++s) uf.unite(S.d(s), S.r(s));
  std::vector<int> comp(m);
  for (int s = 0; s < m; ++s) comp[s] = uf.find(S.d(s));
  G.components = Partition::from_block_ids(std::move(comp));
  return G;
}

std::vector<int> principal_two_sided_ideal(const FiniteInvSemigroup& S, int s) {
  int m = S.order();
  std::vector<char> in(m, 0);
  for (int a = 0; a < m; ++a) {
    int as = S.product(a, s);
    for (int b = 0; b < m; ++b) in[S.product(as, b)] = 1;
  }
  std::vector<int> out;
  for (int t = 0; t < m; ++t)
    if (in[t]) out.push_back(t);
  return out;
}

GreenData green_relations(const FiniteInvSemigroup& S) {
  int m = S.order();
  GreenData G;
  std::vector<int> dkey(m), rkey(m);
  for (int s = 0; s < m; ++s) {
    dkey[s] = S.d(s);
    rkey[s] = S.r(s);
  }
  G.L = Partition::from_block_ids(dkey);
  G.R = Partition::from_block_ids(rkey);
  G.H = G.L.meet(G.R);

  UnionFind uf(m);
  for (int s = 0; s < m; ++s) uf.unite(S.d(s), S.r(s));
  std::vector<int> comp(m);
  for (int s = 0; s < m; ++s) comp[s] = uf.find(S.d(s));
  G.D = Partition::from_block_ids(std::move(comp));

  // J: equal principal two-sided ideals.  Scanned literally when small;
  // otherwise via s in StS iff some u with s D u ≤ t, which the unit tests
  // check against the literal scan on small fixtures.
  if (m <= 300) {
    std::vector<std::vector<int>> ideals(m);
    for (int s = 0; s < m; ++s) ideals[s] = principal_two_sided_ideal(S, s);
    std::vector<int> jkey(m, -1);
    int next = 0;
    for (int s = 0; s < m; ++s) {
      if (jkey[s] != -1) continue;
      jkey[s] = next;
      for (int t = s + 1; t < m; ++t)
        if (jkey[t] == -1 && ideals[t] == ideals[s]) jkey[t] = next;
      ++next;
    }
    G.J = Partition::from_block_ids(std::move(jkey));
  } else {
    // in_ideal[cls of t][cls of s]: s in StS
    int nd = G.D.num_blocks();
    std::vector<std::vector<char>> reach(m, std::vector<char>(nd, 0));
    for (int t = 0; t < m; ++t)
      for (int u = 0; u < m; ++u)
        if (S.leq(u, t)) reach[t][G.D.block_of(u)] = 1;
    UnionFind juf(m);
    for (int s = 0; s < m; ++s)
      for (int t = s + 1; t < m; ++t)
        if (reach[t][G.D.block_of(s)] && reach[s][G.D.block_of(t)])
          juf.unite(s, t);
    G.J = Partition::from_union_find(juf);
  }

  if (!G.D.refines(G.J))
    throw InternalCheckError("D is not contained in J");
  return G;
}

std::vector<int> minimal_groupoid_elements(const FiniteInvSemigroup& S) {
  if (!S.zero())
    throw InvalidInputError("minimal groupoid requires a zero element");
  int z = *S.zero();
  int m = S.order();
  std::vector<int> out;
  std::vector<char> in(m, 0);
  for (int s = 0; s < m; ++s) {
    if (s == z) continue;
    bool minimal = true;
    for (int t = 0; t < m; ++t)
      if (t != s && t != z && S.leq(t, s)) { minimal = false; break; }
    if (minimal) {
      out.push_back(s);
      in[s] = 1;
    }
  }
  for (int s : out)
    for (int t : out) {
      auto p = restricted_product(S, s, t);
      if (p && !in[*p])
        throw InternalCheckError(
            "minimal elements not closed under restricted product");
    }
  return out;
}

}  // namespace iskit
