#include "iskit/constructions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "iskit/errors.hpp"
#include "iskit/predicates.hpp"

namespace iskit {

namespace {

void uniquify_labels(std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (auto& l : labels) {
    while (!seen.insert(l).second) l += "_";
  }
}

}  // namespace

FiniteGroupoid make_groupoid(int size, std::vector<char> identity,
                             std::vector<int> dom, std::vector<int> ran,
                             std::vector<int> inv, std::vector<int> comp,
                             std::vector<std::string> labels) {
  if (size <= 0) throw InvalidInputError("groupoid needs at least one arrow");
  const auto n = static_cast<size_t>(size);
  if (identity.size() != n || dom.size() != n || ran.size() != n ||
      inv.size() != n)
    throw InvalidInputError("groupoid arrow data sizes disagree");
  if (comp.size() != n * n)
    throw InvalidInputError("groupoid composition table has wrong size");
  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < size; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != n)
    throw InvalidInputError("one label per arrow required");
  {
    std::set<std::string> seen;
    for (const auto& l : labels)
      if (!seen.insert(l).second)
        throw InvalidInputError("duplicate arrow label " + l);
  }

  FiniteGroupoid G{size,           std::move(identity), std::move(dom),
                   std::move(ran), std::move(inv),      std::move(comp),
                   std::move(labels)};

  for (int x = 0; x < size; ++x) {
    if (G.dom[x] < 0 || G.dom[x] >= size || G.ran[x] < 0 || G.ran[x] >= size ||
        G.inv[x] < 0 || G.inv[x] >= size)
      throw InvalidInputError("arrow data out of range at " + G.labels[x]);
    if (G.identity[x] && (G.dom[x] != x || G.ran[x] != x))
      throw InvalidInputError("identity arrow " + G.labels[x] +
                              " must be its own endpoints");
    if (!G.identity[G.dom[x]] || !G.identity[G.ran[x]])
      throw InvalidInputError("endpoints of " + G.labels[x] +
                              " are not identity arrows");
  }

  // defined exactly when endpoints match, with the right endpoints
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      int z = G.compose(x, y);
      if (G.composable(x, y)) {
        if (z < 0 || z >= size)
          throw InvalidInputError("missing composite " + G.labels[x] + " * " +
                                  G.labels[y]);
        if (G.dom[z] != G.dom[y] || G.ran[z] != G.ran[x])
          throw InvalidInputError("composite " + G.labels[x] + " * " +
                                  G.labels[y] + " has wrong endpoints");
      } else if (z != -1) {
        throw InvalidInputError("composite of non-composable arrows " +
                                G.labels[x] + " * " + G.labels[y]);
      }
    }

  for (int x = 0; x < size; ++x)
    if (G.compose(x, G.dom[x]) != x || G.compose(G.ran[x], x) != x)
      throw InvalidInputError("identities do not act trivially at " +
                              G.labels[x]);

  for (int x = 0; x < size; ++x) {
    int xi = G.inv[x];
    if (G.inv[xi] != x)
      throw InvalidInputError("inversion is not involutive at " + G.labels[x]);
    if (G.dom[xi] != G.ran[x] || G.ran[xi] != G.dom[x])
      throw InvalidInputError("inverse of " + G.labels[x] +
                              " has wrong endpoints");
    if (G.compose(x, xi) != G.ran[x] || G.compose(xi, x) != G.dom[x])
      throw InvalidInputError("inverse laws fail at " + G.labels[x]);
  }

  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) {
      if (!G.composable(x, y)) continue;
      int xy = G.compose(x, y);
      for (int z = 0; z < size; ++z) {
        if (!G.composable(y, z)) continue;
        if (G.compose(xy, z) != G.compose(x, G.compose(y, z)))
          throw InvalidInputError("composition is not associative at " +
                                  G.labels[x] + ", " + G.labels[y] + ", " +
                                  G.labels[z]);
      }
    }

  return G;
}

FiniteGroupoid pair_groupoid(int n) {
  if (n <= 0) throw InvalidInputError("pair groupoid needs at least one object");
  int size = n * n;
  std::vector<char> identity(size, 0);
  std::vector<int> dom(size), ran(size), inv(size);
  std::vector<int> comp(static_cast<size_t>(size) * size, -1);
  std::vector<std::string> labels(size);
  auto idx = [n](int a, int b) { return a * n + b; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = idx(a, b);
      identity[x] = (a == b) ? 1 : 0;
      dom[x] = idx(b, b);
      ran[x] = idx(a, a);
      inv[x] = idx(b, a);
      labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
  // (a,b)(b,c) = (a,c)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        comp[static_cast<size_t>(idx(a, b)) * size + idx(b, c)] = idx(a, c);
  return make_groupoid(size, std::move(identity), std::move(dom),
                       std::move(ran), std::move(inv), std::move(comp),
                       std::move(labels));
}

FiniteGroupoid groupoid_from_subset(const FiniteInvSemigroup& S,
                                    const std::vector<int>& subset) {
  if (subset.empty())
    throw InvalidInputError("empty subset carries no groupoid structure");
  std::vector<int> local(S.order(), -1);
  for (size_t i = 0; i < subset.size(); ++i) {
    int s = subset[i];
    if (s < 0 || s >= S.order())
      throw InvalidInputError("subset element out of range");
    if (local[s] != -1)
      throw InvalidInputError("subset lists " + S.label(s) + " twice");
    local[s] = static_cast<int>(i);
  }
  auto require_member = [&](int s, const char* what) {
    if (local[s] == -1)
      throw InvalidInputError(std::string("subset is not closed: missing ") +
                              what + " " + S.label(s));
  };
  int size = static_cast<int>(subset.size());
  std::vector<char> identity(size);
  std::vector<int> dom(size), ran(size), inv(size);
  std::vector<int> comp(static_cast<size_t>(size) * size, -1);
  std::vector<std::string> labels(size);
  for (int i = 0; i < size; ++i) {
    int s = subset[i];
    require_member(S.inverse(s), "inverse of");
    require_member(S.d(s), "domain idempotent of");
    require_member(S.r(s), "range idempotent of");
    identity[i] = S.is_idempotent(s) ? 1 : 0;
    dom[i] = local[S.d(s)];
    ran[i] = local[S.r(s)];
    inv[i] = local[S.inverse(s)];
    labels[i] = S.label(s);
  }
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (S.d(subset[i]) != S.r(subset[j])) continue;
      int p = S.product(subset[i], subset[j]);
      require_member(p, "restricted product");
      comp[static_cast<size_t>(i) * size + j] = local[p];
    }
  return make_groupoid(size, std::move(identity), std::move(dom),
                       std::move(ran), std::move(inv), std::move(comp),
                       std::move(labels));
}

FiniteInvSemigroup adjoin_zero(const FiniteGroupoid& G) {
  // revalidate: callers may hand-build the struct
  FiniteGroupoid V = make_groupoid(G.size, G.identity, G.dom, G.ran, G.inv,
                                   G.comp, G.labels);
  int m = V.size + 1;
  int zero = V.size;
  std::vector<std::vector<int>> table(m, std::vector<int>(m, zero));
  for (int x = 0; x < V.size; ++x)
    for (int y = 0; y < V.size; ++y)
      if (V.composable(x, y)) table[x][y] = V.compose(x, y);
  std::vector<std::string> labels = V.labels;
  labels.push_back("0");
  uniquify_labels(labels);
  FiniteInvSemigroup S = from_cayley_table(table, std::move(labels));
  if (!S.zero() || *S.zero() != zero || !is_groupoid_with_zero(S))
    throw InternalCheckError(
        "zero adjunction did not yield a groupoid with zero");
  return S;
}

PresheafOfGroups make_presheaf(
    SemilatticePoset base, std::vector<FiniteInvSemigroup> groups,
    std::vector<std::vector<std::vector<int>>> restriction) {
  int n = base.size();
  if (static_cast<int>(groups.size()) != n)
    throw InvalidInputError("one group per semilattice point required");
  if (static_cast<int>(restriction.size()) != n)
    throw InvalidInputError("one restriction row per semilattice point required");
  for (int e = 0; e < n; ++e) {
    if (!is_group(groups[e]))
      throw InvalidInputError("the structure at " + base.label(e) +
                              " is not a group");
    if (static_cast<int>(restriction[e].size()) != n)
      throw InvalidInputError("restriction row at " + base.label(e) +
                              " has wrong length");
  }
  for (int e = 0; e < n; ++e)
    for (int f = 0; f < n; ++f) {
      const auto& rho = restriction[e][f];
      std::string arrow = base.label(e) + " -> " + base.label(f);
      if (!base.leq(f, e)) {
        if (!rho.empty())
          throw InvalidInputError("restriction " + arrow +
                                  " does not go downward");
        continue;
      }
      const auto& Ge = groups[e];
      const auto& Gf = groups[f];
      if (static_cast<int>(rho.size()) != Ge.order())
        throw InvalidInputError("restriction " + arrow + " has wrong size");
      for (int x : rho)
        if (x < 0 || x >= Gf.order())
          throw InvalidInputError("restriction " + arrow +
                                  " maps outside the target group");
      for (int x = 0; x < Ge.order(); ++x)
        for (int y = 0; y < Ge.order(); ++y)
          if (rho[Ge.product(x, y)] != Gf.product(rho[x], rho[y]))
            throw InvalidInputError("restriction " + arrow +
                                    " is not a homomorphism");
    }
  for (int e = 0; e < n; ++e) {
    const auto& self = restriction[e][e];
    for (int x = 0; x < groups[e].order(); ++x)
      if (self[x] != x)
        throw InvalidInputError("restriction of " + base.label(e) +
                                " to itself is not the identity");
  }
  for (int e = 0; e < n; ++e)
    for (int g = 0; g < n; ++g) {
      if (!base.leq(g, e)) continue;
      for (int f = 0; f < n; ++f) {
        if (!base.leq(f, g)) continue;
        for (int x = 0; x < groups[e].order(); ++x)
          if (restriction[g][f][restriction[e][g][x]] != restriction[e][f][x])
            throw InvalidInputError("restrictions do not compose from " +
                                    base.label(e) + " through " +
                                    base.label(g) + " to " + base.label(f));
      }
    }
  return PresheafOfGroups{std::move(base), std::move(groups),
                          std::move(restriction)};
}

FiniteInvSemigroup clifford_from_presheaf(const PresheafOfGroups& P) {
  // revalidate: callers may hand-build the struct
  PresheafOfGroups V = make_presheaf(P.base, P.groups, P.restriction);
  int n = V.base.size();
  std::vector<int> offset(n + 1, 0);
  for (int e = 0; e < n; ++e) offset[e + 1] = offset[e] + V.groups[e].order();
  int m = offset[n];
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < V.groups[e].order(); ++x)
      labels[offset[e] + x] = V.base.label(e) + "." + V.groups[e].label(x);
  uniquify_labels(labels);
  for (int e = 0; e < n; ++e)
    for (int x = 0; x < V.groups[e].order(); ++x)
      for (int f = 0; f < n; ++f)
        for (int y = 0; y < V.groups[f].order(); ++y) {
          int g = V.base.meet(e, f);
          int prod = V.groups[g].product(V.restriction[e][g][x],
                                         V.restriction[f][g][y]);
          table[offset[e] + x][offset[f] + y] = offset[g] + prod;
        }
  FiniteInvSemigroup S = from_cayley_table(table, std::move(labels));
  if (!is_clifford(S))
    throw InternalCheckError("glued groups are not a Clifford semigroup");
  if (static_cast<int>(S.idempotents().size()) != n)
    throw InternalCheckError("glued groups have the wrong idempotent count");
  return S;
}

PresheafOfGroups presheaf_from_clifford(const FiniteInvSemigroup& S) {
  if (!is_clifford(S))
    throw InvalidInputError(
        "not a Clifford semigroup: some idempotent is not central");
  IdempotentSemilattice IL = semilattice_of_idempotents(S);
  int n = IL.lattice.size();
  std::vector<std::vector<int>> members(n);
  std::vector<int> local(S.order(), -1);
  for (int s = 0; s < S.order(); ++s) {
    if (S.r(s) != S.d(s))
      throw InternalCheckError(
          "central idempotents yet distinct domain and range at " +
          S.label(s));
    int p = IL.point_of_element[S.d(s)];
    local[s] = static_cast<int>(members[p].size());
    members[p].push_back(s);
  }
  std::vector<FiniteInvSemigroup> groups;
  groups.reserve(n);
  for (int p = 0; p < n; ++p) {
    const auto& mem = members[p];
    int k = static_cast<int>(mem.size());
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
      labels[i] = S.label(mem[i]);
      for (int j = 0; j < k; ++j) {
        int prod = S.product(mem[i], mem[j]);
        if (IL.point_of_element[S.d(prod)] != p)
          throw InternalCheckError("maximal subgroup at " +
                                   IL.lattice.label(p) + " is not closed");
        table[i][j] = local[prod];
      }
    }
    FiniteInvSemigroup Ge = from_cayley_table(table, std::move(labels));
    if (!is_group(Ge))
      throw InternalCheckError("block at " + IL.lattice.label(p) +
                               " is not a group");
    groups.push_back(std::move(Ge));
  }
  std::vector<std::vector<std::vector<int>>> restriction(
      n, std::vector<std::vector<int>>(n));
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (!IL.lattice.leq(q, p)) continue;
      int f = IL.element_of_point[q];
      auto& rho = restriction[p][q];
      rho.resize(members[p].size());
      for (size_t i = 0; i < members[p].size(); ++i) {
        int af = S.product(members[p][i], f);
        if (IL.point_of_element[S.d(af)] != q)
          throw InternalCheckError(
              "restriction image leaves the target subgroup");
        rho[i] = local[af];
      }
    }
  try {
    return make_presheaf(std::move(IL.lattice), std::move(groups),
                         std::move(restriction));
  } catch (const InvalidInputError& e) {
    throw InternalCheckError(
        std::string("splitting a Clifford semigroup gave an invalid result: ") +
        e.what());
  }
}

SemilatticeGroupAction make_semilattice_group_action(
    FiniteInvSemigroup group, SemilatticePoset lattice,
    std::vector<std::vector<int>> act) {
  if (!is_group(group))
    throw InvalidInputError("the acting structure must be a group");
  int ng = group.order();
  int np = lattice.size();
  if (static_cast<int>(act.size()) != ng)
    throw InvalidInputError("one action row per group element required");
  for (int g = 0; g < ng; ++g) {
    if (static_cast<int>(act[g].size()) != np)
      throw InvalidInputError("action row for " + group.label(g) +
                              " has wrong length");
    std::vector<char> hit(np, 0);
    for (int p = 0; p < np; ++p) {
      int q = act[g][p];
      if (q < 0 || q >= np)
        throw InvalidInputError("action row for " + group.label(g) +
                                " maps outside the semilattice");
      if (hit[q])
        throw InvalidInputError("group element " + group.label(g) +
                                " does not act bijectively");
      hit[q] = 1;
    }
  }
  int one = *group.identity();
  for (int p = 0; p < np; ++p)
    if (act[one][p] != p)
      throw InvalidInputError("the group identity must act trivially");
  for (int g = 0; g < ng; ++g)
    for (int h = 0; h < ng; ++h)
      for (int p = 0; p < np; ++p)
        if (act[group.product(g, h)][p] != act[g][act[h][p]])
          throw InvalidInputError("action does not respect the product at " +
                                  group.label(g) + ", " + group.label(h));
  for (int g = 0; g < ng; ++g)
    for (int e = 0; e < np; ++e)
      for (int f = 0; f < np; ++f)
        if (lattice.leq(e, f) != lattice.leq(act[g][e], act[g][f]))
          throw InvalidInputError("group element " + group.label(g) +
                                  " does not preserve the order");
  // an order automorphism of a meet-semilattice preserves meets
  for (int g = 0; g < ng; ++g)
    for (int e = 0; e < np; ++e)
      for (int f = 0; f < np; ++f)
        if (act[g][lattice.meet(e, f)] !=
            lattice.meet(act[g][e], act[g][f]))
          throw InternalCheckError("order automorphism fails on meets");
  return SemilatticeGroupAction{std::move(group), std::move(lattice),
                                std::move(act)};
}

FiniteInvSemigroup semidirect_product(const SemilatticeGroupAction& act) {
  // revalidate: callers may hand-build the struct
  SemilatticeGroupAction V =
      make_semilattice_group_action(act.group, act.lattice, act.act);
  int np = V.lattice.size();
  int ng = V.group.order();
  int m = np * ng;
  auto idx = [ng](int e, int g) { return e * ng + g; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int e = 0; e < np; ++e)
    for (int g = 0; g < ng; ++g)
      labels[idx(e, g)] = V.lattice.label(e) + "." + V.group.label(g);
  uniquify_labels(labels);
  for (int e = 0; e < np; ++e)
    for (int g = 0; g < ng; ++g)
      for (int f = 0; f < np; ++f)
        for (int h = 0; h < ng; ++h)
          table[idx(e, g)][idx(f, h)] =
              idx(V.lattice.meet(e, V.act[g][f]), V.group.product(g, h));
  FiniteInvSemigroup S = from_cayley_table(table, std::move(labels));

  int one = *V.group.identity();
  for (int e = 0; e < np; ++e)
    for (int g = 0; g < ng; ++g)
      if (S.is_idempotent(idx(e, g)) != (g == one))
        throw InternalCheckError("product has unexpected idempotents");
  // (e,g) ≤ (f,h) iff e ≤ f and g = h
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      bool expect = (x % ng == y % ng) && V.lattice.leq(x / ng, y / ng);
      if (S.leq(x, y) != expect)
        throw InternalCheckError("product has unexpected natural order");
    }
  if (!is_E_unitary(S))
    throw InternalCheckError("product is not E-unitary");
  return S;
}

namespace {

// all permutations of the points preserving the order in both directions
std::vector<std::vector<int>> order_automorphisms(const SemilatticePoset& Y) {
  int n = Y.size();
  std::vector<std::vector<int>> result;
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  std::function<void(int)> rec = [&](int p) {
    if (p == n) {
      result.push_back(perm);
      return;
    }
    for (int q = 0; q < n; ++q) {
      if (used[q]) continue;
      bool ok = true;
      for (int r = 0; r < p && ok; ++r)
        ok = Y.leq(p, r) == Y.leq(q, perm[r]) &&
             Y.leq(r, p) == Y.leq(perm[r], q);
      if (!ok) continue;
      used[q] = 1;
      perm[p] = q;
      rec(p + 1);
      used[q] = 0;
      perm[p] = -1;
    }
  };
  rec(0);
  return result;
}

// every homomorphism from the group into the given permutations, as maps
// from group elements to indices into autos
std::vector<std::vector<int>> group_homs_into(
    const FiniteInvSemigroup& G, const std::vector<std::vector<int>>& autos) {
  int one = *G.identity();
  int npts = static_cast<int>(autos.front().size());

  std::vector<int> gens;
  {
    std::vector<char> in_span(G.order(), 0);
    in_span[one] = 1;
    std::vector<int> span = {one};
    for (int s = 0; s < G.order(); ++s) {
      if (in_span[s]) continue;
      gens.push_back(s);
      span.push_back(s);
      span = inverse_subsemigroup_generated(G, span);
      std::fill(in_span.begin(), in_span.end(), 0);
      for (int x : span) in_span[x] = 1;
    }
  }

  struct Letter {
    int gen;
    bool inverted;
    int elem;
  };
  std::vector<Letter> alphabet;
  for (size_t k = 0; k < gens.size(); ++k) {
    alphabet.push_back({static_cast<int>(k), false, gens[k]});
    alphabet.push_back({static_cast<int>(k), true, G.inverse(gens[k])});
  }

  std::vector<int> parent(G.order(), -1), via(G.order(), -1), order;
  {
    std::vector<char> seen(G.order(), 0);
    seen[one] = 1;
    order.push_back(one);
    std::queue<int> bfs;
    bfs.push(one);
    while (!bfs.empty()) {
      int y = bfs.front();
      bfs.pop();
      for (size_t a = 0; a < alphabet.size(); ++a) {
        int x = G.product(alphabet[a].elem, y);
        if (!seen[x]) {
          seen[x] = 1;
          parent[x] = y;
          via[x] = static_cast<int>(a);
          order.push_back(x);
          bfs.push(x);
        }
      }
    }
    if (static_cast<int>(order.size()) != G.order())
      throw InternalCheckError("generating set does not generate the group");
  }

  auto compose_perm = [npts](const std::vector<int>& p,
                             const std::vector<int>& q) {
    std::vector<int> r(npts);
    for (int i = 0; i < npts; ++i) r[i] = p[q[i]];
    return r;
  };
  auto invert_perm = [npts](const std::vector<int>& p) {
    std::vector<int> r(npts);
    for (int i = 0; i < npts; ++i) r[p[i]] = i;
    return r;
  };
  std::map<std::vector<int>, int> auto_index;
  for (size_t i = 0; i < autos.size(); ++i)
    auto_index[autos[i]] = static_cast<int>(i);
  auto find_auto = [&auto_index](const std::vector<int>& p) {
    auto it = auto_index.find(p);
    if (it == auto_index.end())
      throw InternalCheckError("automorphisms are not closed under composition");
    return it->second;
  };
  std::vector<int> id_perm(npts);
  for (int i = 0; i < npts; ++i) id_perm[i] = i;
  int id_index = find_auto(id_perm);

  // odometer over images of the generators; different assignments can
  // replay to the same map, so collect into a set
  std::set<std::vector<int>> homs;
  int k = static_cast<int>(gens.size());
  std::vector<int> choice(k, 0);
  while (true) {
    std::vector<int> h(G.order(), -1);
    h[one] = id_index;
    for (size_t oi = 1; oi < order.size(); ++oi) {
      int x = order[oi];
      const Letter& L = alphabet[via[x]];
      const std::vector<int>& gp = autos[choice[L.gen]];
      std::vector<int> lp = L.inverted ? invert_perm(gp) : gp;
      h[x] = find_auto(compose_perm(lp, autos[h[parent[x]]]));
    }
    bool ok = true;
    for (int a = 0; a < G.order() && ok; ++a)
      for (int b = 0; b < G.order() && ok; ++b)
        if (h[G.product(a, b)] !=
            find_auto(compose_perm(autos[h[a]], autos[h[b]])))
          ok = false;
    if (ok) homs.insert(std::move(h));

    int pos = 0;
    while (pos < k && ++choice[pos] == static_cast<int>(autos.size())) {
      choice[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
  }
  return {homs.begin(), homs.end()};
}

std::vector<std::vector<int>> normal_subgroups(const FiniteInvSemigroup& G) {
  std::set<std::vector<int>> subs;
  std::queue<std::vector<int>> work;
  std::vector<int> trivial = {*G.identity()};
  subs.insert(trivial);
  work.push(trivial);
  while (!work.empty()) {
    auto H = work.front();
    work.pop();
    for (int g = 0; g < G.order(); ++g) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      auto seeds = H;
      seeds.push_back(g);
      auto K = inverse_subsemigroup_generated(G, seeds);
      std::sort(K.begin(), K.end());
      if (subs.insert(K).second) work.push(K);
    }
  }
  std::vector<std::vector<int>> result;
  for (const auto& H : subs) {
    bool normal = true;
    for (int g = 0; g < G.order() && normal; ++g)
      for (int x : H)
        if (!std::binary_search(
                H.begin(), H.end(),
                G.product(G.product(g, x), G.inverse(g)))) {
          normal = false;
          break;
        }
    if (normal) result.push_back(H);
  }
  return result;
}

}  // namespace

SemidirectRecognition semidirect_recognition(const FiniteInvSemigroup& S) {
  SemidirectRecognition R;
  R.has_zero = S.zero().has_value();
  int m = S.order();
  Congruence sig = sigma(S);
  FiniteInvSemigroup G = quotient(S, sig);
  if (!is_group(G))
    throw InternalCheckError(
        "quotient by the minimum group congruence is not a group");
  int nG = G.order();
  int nE = static_cast<int>(S.idempotents().size());
  IdempotentSemilattice IL = semilattice_of_idempotents(S);

  {
    std::set<std::pair<int, int>> dom_pairs, ran_pairs;
    for (int s = 0; s < m; ++s) {
      dom_pairs.insert({S.d(s), sig.block_of(s)});
      ran_pairs.insert({S.r(s), sig.block_of(s)});
    }
    R.by_domain_pairing =
        static_cast<int>(dom_pairs.size()) == m && m == nE * nG;
    R.by_range_pairing =
        static_cast<int>(ran_pairs.size()) == m && m == nE * nG;
  }

  {
    // E-unitary, and every element has a compatible partner at each domain
    bool ok = is_E_unitary(S);
    if (ok) {
      Relation compat = compatibility(S);
      for (int a = 0; a < m && ok; ++a)
        for (int e : S.idempotents()) {
          bool found = false;
          for (int b = 0; b < m && !found; ++b)
            if (compat.at(a, b) && S.d(b) == e) found = true;
          if (!found) {
            ok = false;
            break;
          }
        }
    }
    R.by_unitary_cover = ok;
  }

  {
    StarMapReport sm = star_maps(quotient_hom(S, sig));
    R.by_min_group_star_bijective = sm.star_injective && sm.star_surjective;
  }

  {
    // group congruences on S correspond to normal subgroups of the minimum
    // group image
    bool ok = false;
    for (const auto& N : normal_subgroups(G)) {
      std::vector<int> gblock(nG);
      for (int g = 0; g < nG; ++g) {
        int best = nG;
        for (int x : N) best = std::min(best, G.product(g, x));
        gblock[g] = best;
      }
      std::vector<int> sblock(m);
      for (int s = 0; s < m; ++s) sblock[s] = gblock[sig.block_of(s)];
      Congruence rho = Congruence::checked(S, Partition::from_block_ids(sblock));
      StarMapReport sm = star_maps(quotient_hom(S, rho));
      if (sm.star_injective && sm.star_surjective) {
        ok = true;
        break;
      }
    }
    R.by_some_group_star_bijective = ok;
  }

  {
    // a product it could be isomorphic to must use its own idempotent
    // semilattice and minimum group image, so only matching orders qualify
    bool found = false;
    if (m == nE * nG) {
      auto autos = order_automorphisms(IL.lattice);
      for (const auto& h : group_homs_into(G, autos)) {
        std::vector<std::vector<int>> act(nG);
        for (int g = 0; g < nG; ++g) act[g] = autos[h[g]];
        SemilatticeGroupAction A =
            make_semilattice_group_action(G, IL.lattice, std::move(act));
        if (are_isomorphic(S, semidirect_product(A))) {
          found = true;
          break;
        }
      }
    }
    R.by_isomorphism_search = found;
  }

  {
    const bool v[6] = {R.by_isomorphism_search,
                       R.by_unitary_cover,
                       R.by_min_group_star_bijective,
                       R.by_some_group_star_bijective,
                       R.by_domain_pairing,
                       R.by_range_pairing};
    for (int i = 1; i < 6; ++i)
      if (v[i] != v[0]) {
        std::string msg = "semidirect product tests disagree:";
        for (bool b : v) msg += b ? " yes" : " no";
        throw InternalCheckError(msg);
      }
  }

  if (R.recognized()) {
    // the class of s sends each domain idempotent e to the range of the
    // element of that class with domain e
    int np = IL.lattice.size();
    std::vector<std::vector<int>> act(nG, std::vector<int>(np, -1));
    for (int s = 0; s < m; ++s) {
      int gamma = sig.block_of(s);
      int p = IL.point_of_element[S.d(s)];
      int target = IL.point_of_element[S.r(s)];
      if (act[gamma][p] != -1 && act[gamma][p] != target)
        throw InternalCheckError("domain pairing is not single valued");
      act[gamma][p] = target;
    }
    for (const auto& row : act)
      for (int v : row)
        if (v == -1) throw InternalCheckError("domain pairing is not onto");
    SemilatticeGroupAction A = [&] {
      try {
        return make_semilattice_group_action(G, IL.lattice, std::move(act));
      } catch (const InvalidInputError& e) {
        throw InternalCheckError(
            std::string("recognized product but the induced action is invalid: ") +
            e.what());
      }
    }();
    FiniteInvSemigroup P = semidirect_product(A);
    std::vector<int> iso(m);
    for (int s = 0; s < m; ++s)
      iso[s] = IL.point_of_element[S.r(s)] * nG + sig.block_of(s);
    Homomorphism h = [&] {
      try {
        return make_homomorphism(S, P, iso);
      } catch (const InvalidInputError& e) {
        throw InternalCheckError(
            std::string("recognized product but the range pairing is not a homomorphism: ") +
            e.what());
      }
    }();
    if (!is_injective(h) || !is_surjective(h))
      throw InternalCheckError("range pairing is not bijective after recognition");
    R.witness = SemidirectWitness{std::move(A), std::move(P), std::move(iso)};
  }

  return R;
}

}  // namespace iskit
