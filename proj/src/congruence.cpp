#include "iskit/congruence.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "iskit/errors.hpp"
#include "iskit/green.hpp"
#include "iskit/semilattice.hpp"

namespace iskit {

Congruence Congruence::checked(const FiniteInvSemigroup& S, Partition p) {
  if (p.size() != S.order())
    throw InvalidInputError("partition size does not match semigroup order");
  // left/right compatibility against one representative per block suffices
  auto blocks = p.blocks();
  for (const auto& block : blocks) {
    int a = block.front();
    for (size_t i = 1; i < block.size(); ++i) {
      int b = block[i];
      for (int c = 0; c < S.order(); ++c) {
        if (!p.same_block(S.product(c, a), S.product(c, b)) ||
            !p.same_block(S.product(a, c), S.product(b, c)))
          throw InvalidInputError("partition is not a congruence");
      }
    }
  }
  return Congruence(std::move(p));
}

Congruence Congruence::equality(const FiniteInvSemigroup& S) {
  return Congruence(Partition::singletons(S.order()));
}

Congruence Congruence::universal(const FiniteInvSemigroup& S) {
  return Congruence(Partition::universal(S.order()));
}

Congruence principal_congruence(const FiniteInvSemigroup& S, int a, int b) {
  int m = S.order();
  if (a < 0 || a >= m || b < 0 || b >= m)
    throw InvalidInputError("element index out of range");
  UnionFind uf(m);
  std::deque<std::pair<int, int>> work{{a, b}};
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    if (!uf.unite(x, y)) continue;
    for (int c = 0; c < m; ++c) {
      work.emplace_back(S.product(c, x), S.product(c, y));
      work.emplace_back(S.product(x, c), S.product(y, c));
    }
  }
  return Congruence::checked(S, Partition::from_union_find(uf));
}

Congruence join_congruences(const FiniteInvSemigroup& S, const Congruence& x,
                            const Congruence& y) {
  return Congruence::checked(S, x.partition().join(y.partition()));
}

std::vector<Congruence> enumerate_congruences(const FiniteInvSemigroup& S,
                                              int cap) {
  int m = S.order();
  if (m > cap)
    throw CapExceededError("order " + std::to_string(m) +
                           " exceeds congruence enumeration cap " +
                           std::to_string(cap));
  std::vector<Congruence> principals;
  std::set<Partition> seen;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Congruence p = principal_congruence(S, a, b);
      if (seen.insert(p.partition()).second) principals.push_back(p);
    }

  std::set<Partition> lattice;
  std::deque<Congruence> work;
  Congruence eq = Congruence::equality(S);
  lattice.insert(eq.partition());
  work.push_back(eq);
  while (!work.empty()) {
    Congruence rho = work.front();
    work.pop_front();
    for (const auto& p : principals) {
      Congruence joined = join_congruences(S, rho, p);
      if (lattice.insert(joined.partition()).second) work.push_back(joined);
    }
  }

  std::vector<Congruence> out;
  for (const auto& part : lattice)
    out.push_back(Congruence::checked(S, part));
  std::sort(out.begin(), out.end(),
            [](const Congruence& a, const Congruence& b) {
              if (a.num_blocks() != b.num_blocks())
                return a.num_blocks() > b.num_blocks();
              return a.partition() < b.partition();
            });
  return out;
}

Congruence sigma(const FiniteInvSemigroup& S) {
  int m = S.order();
  UnionFind uf(m);
  for (int u = 0; u < m; ++u) {
    int first = -1;
    for (int t = 0; t < m; ++t)
      if (S.leq(u, t)) {
        if (first == -1) first = t;
        else uf.unite(first, t);
      }
  }
  return Congruence::checked(S, Partition::from_union_find(uf));
}

Congruence mu(const FiniteInvSemigroup& S) {
  int m = S.order();
  const auto& idem = S.idempotents();
  std::vector<std::vector<int>> sig(m, std::vector<int>(idem.size()));
  for (int s = 0; s < m; ++s)
    for (size_t k = 0; k < idem.size(); ++k)
      sig[s][k] = S.product(S.product(s, idem[k]), S.inverse(s));
  std::vector<int> block(m, -1);
  int next = 0;
  for (int s = 0; s < m; ++s) {
    if (block[s] != -1) continue;
    block[s] = next;
    for (int t = s + 1; t < m; ++t)
      if (block[t] == -1 && sig[t] == sig[s]) block[t] = next;
    ++next;
  }
  return Congruence::checked(S, Partition::from_block_ids(std::move(block)));
}

Congruence xi(const FiniteInvSemigroup& S) {
  if (!S.zero())
    throw InvalidInputError("syntactic congruence of the zero requires a zero");
  int z = *S.zero();
  int m = S.order();
  // cheap prefilter: the one-sided zero patterns must match
  std::vector<std::vector<char>> side(m, std::vector<char>(2 * m));
  for (int s = 0; s < m; ++s)
    for (int a = 0; a < m; ++a) {
      side[s][a] = S.product(a, s) == z ? 1 : 0;
      side[s][m + a] = S.product(s, a) == z ? 1 : 0;
    }
  auto contexts = [&](int s) {
    std::vector<char> ctx(static_cast<size_t>(m) * m);
    for (int a = 0; a < m; ++a) {
      int as = S.product(a, s);
      for (int b = 0; b < m; ++b)
        ctx[static_cast<size_t>(a) * m + b] = S.product(as, b) == z ? 1 : 0;
    }
    return ctx;
  };
  std::vector<int> block(m, -1);
  int next = 0;
  for (int s = 0; s < m; ++s) {
    if (block[s] != -1) continue;
    block[s] = next;
    std::vector<char> ctx_s;
    for (int t = s + 1; t < m; ++t) {
      if (block[t] != -1 || side[t] != side[s]) continue;
      if (ctx_s.empty()) ctx_s = contexts(s);
      if (contexts(t) == ctx_s) block[t] = next;
    }
    ++next;
  }
  return Congruence::checked(S, Partition::from_block_ids(std::move(block)));
}

FiniteInvSemigroup quotient(const FiniteInvSemigroup& S, const Congruence& rho) {
  if (rho.size() != S.order())
    throw InvalidInputError("congruence does not match semigroup order");
  int k = rho.num_blocks();
  std::vector<int> rep(k, -1);
  for (int s = 0; s < S.order(); ++s)
    if (rep[rho.block_of(s)] == -1) rep[rho.block_of(s)] = s;
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i][j] = rho.block_of(S.product(rep[i], rep[j]));
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) labels.push_back(S.label(rep[i]));
  return from_cayley_table(table, std::move(labels));
}

FiniteInvSemigroup max_group_image(const FiniteInvSemigroup& S) {
  FiniteInvSemigroup Q = quotient(S, sigma(S));
  if (Q.idempotents().size() != 1)
    throw InternalCheckError("quotient by sigma is not a group");
  return Q;
}

ReesQuotient rees_quotient(const FiniteInvSemigroup& S,
                           const std::vector<int>& ideal) {
  int m = S.order();
  if (ideal.empty()) throw InvalidInputError("ideal must be nonempty");
  std::vector<char> in(m, 0);
  for (int i : ideal) {
    if (i < 0 || i >= m) throw InvalidInputError("ideal index out of range");
    in[i] = 1;
  }
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < m; ++i)
      if (in[i] && (!in[S.product(a, i)] || !in[S.product(i, a)]))
        throw InvalidInputError("subset is not a two-sided ideal");

  std::vector<int> map(m, 0);
  std::vector<int> rep{-1};  // new zero
  for (int s = 0; s < m; ++s)
    if (!in[s]) {
      map[s] = static_cast<int>(rep.size());
      rep.push_back(s);
    }
  int k = static_cast<int>(rep.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k, 0));
  for (int i = 1; i < k; ++i)
    for (int j = 1; j < k; ++j) {
      int p = S.product(rep[i], rep[j]);
      table[i][j] = in[p] ? 0 : map[p];
    }
  std::vector<std::string> labels{"0"};
  for (int i = 1; i < k; ++i) {
    std::string lab = S.label(rep[i]);
    while (std::find(labels.begin(), labels.end(), lab) != labels.end())
      lab += "_";
    labels.push_back(lab);
  }
  return ReesQuotient{from_cayley_table(table, std::move(labels)),
                      std::move(map)};
}

bool NormalSubsemigroup::contains(int x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

NormalSubsemigroup make_normal_subsemigroup(const FiniteInvSemigroup& S,
                                            std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  NormalSubsemigroup K{std::move(elements)};
  if (K.elements.empty())
    throw InvalidInputError("normal subsemigroup must be nonempty");
  for (int x : K.elements)
    if (x < 0 || x >= S.order())
      throw InvalidInputError("element index out of range");
  for (int e : S.idempotents())
    if (!K.contains(e))
      throw InvalidInputError("not wide: missing idempotent " + S.label(e));
  for (int x : K.elements) {
    if (!K.contains(S.inverse(x)))
      throw InvalidInputError("not closed under inversion");
    for (int y : K.elements)
      if (!K.contains(S.product(x, y)))
        throw InvalidInputError("not closed under products");
  }
  for (int s = 0; s < S.order(); ++s)
    for (int x : K.elements)
      if (!K.contains(S.product(S.product(s, x), S.inverse(s))))
        throw InvalidInputError("not self-conjugate");
  return K;
}

NormalSubsemigroup centralizer_of_idempotents(const FiniteInvSemigroup& S) {
  std::vector<int> elems;
  for (int s = 0; s < S.order(); ++s) {
    bool central = true;
    for (int e : S.idempotents())
      if (S.product(s, e) != S.product(e, s)) { central = false; break; }
    if (central) elems.push_back(s);
  }
  return make_normal_subsemigroup(S, std::move(elems));
}

Congruence congruence_from_kernel(const FiniteInvSemigroup& S,
                                  const NormalSubsemigroup& K) {
  make_normal_subsemigroup(S, K.elements);  // revalidate
  for (int x : K.elements)
    for (int e : S.idempotents())
      if (S.product(x, e) != S.product(e, x))
        throw InvalidInputError(
            "kernel is not central: " + S.label(x) +
            " does not commute with idempotent " + S.label(e));
  int m = S.order();
  UnionFind uf(m);
  for (int s = 0; s < m; ++s)
    for (int t = s + 1; t < m; ++t)
      if (S.d(s) == S.d(t) && K.contains(S.product(s, S.inverse(t))))
        uf.unite(s, t);
  Congruence rho = Congruence::checked(S, Partition::from_union_find(uf));
  if (!is_idempotent_separating(S, rho))
    throw InternalCheckError("kernel congruence fails to separate idempotents");
  if (kernel_subsemigroup(S, rho).elements != K.elements)
    throw InternalCheckError("kernel of the kernel congruence is not K");
  return rho;
}

NormalSubsemigroup kernel_subsemigroup(const FiniteInvSemigroup& S,
                                       const Congruence& rho) {
  std::vector<int> elems;
  for (int s = 0; s < S.order(); ++s) {
    bool with_idem = false;
    for (int e : S.idempotents())
      if (rho.same(s, e)) { with_idem = true; break; }
    if (with_idem) elems.push_back(s);
  }
  return make_normal_subsemigroup(S, std::move(elems));
}

bool is_idempotent_separating(const FiniteInvSemigroup& S,
                              const Congruence& rho) {
  const auto& idem = S.idempotents();
  for (size_t i = 0; i < idem.size(); ++i)
    for (size_t j = i + 1; j < idem.size(); ++j)
      if (rho.same(idem[i], idem[j])) return false;
  return true;
}

bool is_idempotent_pure(const FiniteInvSemigroup& S, const Congruence& rho) {
  for (int e : S.idempotents())
    for (int s = 0; s < S.order(); ++s)
      if (rho.same(s, e) && !S.is_idempotent(s)) return false;
  return true;
}

bool is_zero_restricted(const FiniteInvSemigroup& S, const Congruence& rho) {
  if (!S.zero())
    throw InvalidInputError("zero-restriction test requires a zero");
  int z = *S.zero();
  for (int s = 0; s < S.order(); ++s)
    if (s != z && rho.same(s, z)) return false;
  return true;
}

bool is_fundamental(const FiniteInvSemigroup& S) {
  return centralizer_of_idempotents(S).elements == S.idempotents();
}

bool is_zero_disjunctive(const FiniteInvSemigroup& S) {
  return xi(S).num_blocks() == S.order();
}

bool is_zero_simple(const FiniteInvSemigroup& S) {
  if (!S.zero())
    throw InvalidInputError("zero-simplicity test requires a zero");
  int m = S.order();
  GreenData G = green_relations(S);

  bool by_ideals = m >= 2 && G.J.num_blocks() == 2;

  bool by_idempotents = m >= 2;
  if (by_idempotents) {
    int z = *S.zero();
    for (int e : S.idempotents()) {
      if (e == z) continue;
      for (int f : S.idempotents()) {
        if (f == z) continue;
        bool linked = false;
        for (int i : S.idempotents())
          if (G.D.same_block(e, i) && S.leq(i, f)) { linked = true; break; }
        if (!linked) { by_idempotents = false; break; }
      }
      if (!by_idempotents) break;
    }
  }

  if (by_ideals != by_idempotents)
    throw InternalCheckError("zero-simplicity characterizations disagree");
  return by_ideals;
}

bool is_congruence_free(const FiniteInvSemigroup& S, int enumeration_cap) {
  if (!S.zero())
    throw InvalidInputError("congruence-freeness test requires a zero");
  bool verdict = is_fundamental(S) && is_zero_simple(S) &&
                 is_zero_disjunctive_semilattice(
                     semilattice_of_idempotents(S).lattice);
  if (S.order() <= enumeration_cap) {
    bool counted = enumerate_congruences(S, enumeration_cap).size() == 2;
    if (counted != verdict)
      throw InternalCheckError(
          "congruence-freeness characterization disagrees with enumeration");
  }
  return verdict;
}

}  // namespace iskit
