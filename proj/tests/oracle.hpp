#ifndef ISKIT_TESTS_ORACLE_HPP
#define ISKIT_TESTS_ORACLE_HPP

// Brute-force reference implementations used to validate library results.
// Everything here is computed from first definitions over raw image vectors
// and multiplication tables; the only library calls are plain table lookups.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "iskit/inverse_semigroup.hpp"

namespace oracle {

// a partial map as its image vector, -1 marking undefined entries
using Map = std::vector<int>;

inline Map map_compose(const Map& f, const Map& g) {
  Map h(f.size(), -1);
  for (size_t x = 0; x < g.size(); ++x)
    if (g[x] != -1 && f[g[x]] != -1) h[x] = f[g[x]];
  return h;
}

inline Map map_invert(const Map& f) {
  Map g(f.size(), -1);
  for (size_t x = 0; x < f.size(); ++x)
    if (f[x] != -1) g[f[x]] = static_cast<int>(x);
  return g;
}

inline bool map_injective(const Map& f) {
  std::set<int> seen;
  for (int v : f)
    if (v != -1 && !seen.insert(v).second) return false;
  return true;
}

// sum over k of C(n,k)^2 k!
inline long long partial_bijection_count(int n) {
  auto choose = [](int a, int b) {
    long long c = 1;
    for (int i = 0; i < b; ++i) c = c * (a - i) / (i + 1);
    return c;
  };
  long long total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += choose(n, k) * choose(n, k) * fact;
  }
  return total;
}

// smallest set of maps containing the seeds and closed under composition
// and inversion, by plain fixpoint iteration
inline std::set<Map> closure(const std::vector<Map>& gens) {
  std::set<Map> all(gens.begin(), gens.end());
  for (const Map& f : gens) all.insert(map_invert(f));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Map> snapshot(all.begin(), all.end());
    for (const Map& f : snapshot)
      for (const Map& g : snapshot) {
        if (all.insert(map_compose(f, g)).second) grew = true;
      }
  }
  return all;
}

// every partition of {0..n-1} as a block-id vector in restricted growth form
inline std::vector<std::vector<int>> all_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> block(n, 0);
  auto rec = [&](auto&& self, int i, int max_used) -> void {
    if (i == n) {
      out.push_back(block);
      return;
    }
    for (int b = 0; b <= max_used + 1; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(max_used, b));
    }
  };
  if (n == 0)
    out.push_back({});
  else
    rec(rec, 0, -1);
  return out;
}

// congruence test straight from the definition: one-sided compatibility on
// both sides (which gives the two-sided version by composing the two steps)
inline bool is_congruence(const iskit::FiniteInvSemigroup& S,
                          const std::vector<int>& block) {
  int n = S.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (block[a] != block[b]) continue;
      for (int c = 0; c < n; ++c) {
        if (block[S.product(a, c)] != block[S.product(b, c)]) return false;
        if (block[S.product(c, a)] != block[S.product(c, b)]) return false;
      }
    }
  return true;
}

// every congruence, by filtering all partitions; only sane for tiny hosts
inline std::vector<std::vector<int>> all_congruences(
    const iskit::FiniteInvSemigroup& S) {
  if (S.order() > 8) throw std::runtime_error("host too large for the oracle");
  std::vector<std::vector<int>> out;
  for (auto& p : all_partitions(S.order()))
    if (is_congruence(S, p)) out.push_back(p);
  return out;
}

// the quotient of a congruence is a group: literal identity and inverse
// axioms over the block table
inline bool quotient_is_group(const iskit::FiniteInvSemigroup& S,
                              const std::vector<int>& block) {
  int nb = 1 + *std::max_element(block.begin(), block.end());
  std::vector<std::vector<int>> t(nb, std::vector<int>(nb, -1));
  for (int a = 0; a < S.order(); ++a)
    for (int b = 0; b < S.order(); ++b)
      t[block[a]][block[b]] = block[S.product(a, b)];
  int e = -1;
  for (int x = 0; x < nb; ++x) {
    bool ident = true;
    for (int y = 0; y < nb; ++y)
      if (t[x][y] != y || t[y][x] != y) ident = false;
    if (ident) e = x;
  }
  if (e == -1) return false;
  for (int x = 0; x < nb; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < nb; ++y)
      if (t[x][y] == e && t[y][x] == e) has_inverse = true;
    if (!has_inverse) return false;
  }
  return true;
}

inline bool refines(const std::vector<int>& fine,
                    const std::vector<int>& coarse) {
  for (size_t i = 0; i < fine.size(); ++i)
    for (size_t j = i + 1; j < fine.size(); ++j)
      if (fine[i] == fine[j] && coarse[i] != coarse[j]) return false;
  return true;
}

// the unique finest congruence with a group quotient
inline std::vector<int> least_group_congruence(
    const iskit::FiniteInvSemigroup& S) {
  std::vector<std::vector<int>> groupy;
  for (auto& c : all_congruences(S))
    if (quotient_is_group(S, c)) groupy.push_back(c);
  for (auto& cand : groupy) {
    bool least = true;
    for (auto& other : groupy)
      if (!refines(cand, other)) least = false;
    if (least) return cand;
  }
  throw std::runtime_error("no least group congruence found");
}

// the unique coarsest congruence separating the idempotents
inline std::vector<int> largest_idempotent_separating_congruence(
    const iskit::FiniteInvSemigroup& S) {
  std::vector<std::vector<int>> seps;
  for (auto& c : all_congruences(S)) {
    bool separating = true;
    for (int e : S.idempotents())
      for (int f : S.idempotents())
        if (e != f && c[e] == c[f]) separating = false;
    if (separating) seps.push_back(c);
  }
  for (auto& cand : seps) {
    bool coarsest = true;
    for (auto& other : seps)
      if (!refines(other, cand)) coarsest = false;
    if (coarsest) return cand;
  }
  throw std::runtime_error("no largest idempotent separating congruence");
}

// the unique coarsest congruence whose zero class is a singleton
inline std::vector<int> largest_zero_restricted_congruence(
    const iskit::FiniteInvSemigroup& S) {
  if (!S.zero()) throw std::runtime_error("host has no zero");
  int z = *S.zero();
  std::vector<std::vector<int>> zr;
  for (auto& c : all_congruences(S)) {
    bool restricted = true;
    for (int s = 0; s < S.order(); ++s)
      if (s != z && c[s] == c[z]) restricted = false;
    if (restricted) zr.push_back(c);
  }
  for (auto& cand : zr) {
    bool coarsest = true;
    for (auto& other : zr)
      if (!refines(other, cand)) coarsest = false;
    if (coarsest) return cand;
  }
  throw std::runtime_error("no largest zero restricted congruence");
}

// the natural order from its defining equation alone
inline bool leq(const iskit::FiniteInvSemigroup& S, int s, int t) {
  return s == S.product(t, S.product(S.inverse(s), s));
}

// greatest lower bound under the natural order by exhaustive scan
inline std::optional<int> meet_by_scan(const iskit::FiniteInvSemigroup& S,
                                       int s, int t) {
  std::vector<int> lowers;
  for (int u = 0; u < S.order(); ++u)
    if (leq(S, u, s) && leq(S, u, t)) lowers.push_back(u);
  for (int u : lowers) {
    bool greatest = true;
    for (int v : lowers)
      if (!leq(S, v, u)) greatest = false;
    if (greatest) return u;
  }
  return std::nullopt;
}

// principal left/right/two-sided ideals as sorted element sets
inline std::vector<int> left_ideal(const iskit::FiniteInvSemigroup& S, int s) {
  std::set<int> out{s};
  for (int x = 0; x < S.order(); ++x) out.insert(S.product(x, s));
  return {out.begin(), out.end()};
}

inline std::vector<int> right_ideal(const iskit::FiniteInvSemigroup& S,
                                    int s) {
  std::set<int> out{s};
  for (int x = 0; x < S.order(); ++x) out.insert(S.product(s, x));
  return {out.begin(), out.end()};
}

inline std::vector<int> two_sided_ideal(const iskit::FiniteInvSemigroup& S,
                                        int s) {
  std::set<int> out{s};
  for (int x = 0; x < S.order(); ++x) {
    out.insert(S.product(x, s));
    out.insert(S.product(s, x));
    for (int y = 0; y < S.order(); ++y)
      out.insert(S.product(S.product(x, s), y));
  }
  return {out.begin(), out.end()};
}

// the syntactic congruence of {0}: two elements are identified when every
// two-sided context sends both or neither to zero
inline std::vector<int> xi_by_context_scan(
    const iskit::FiniteInvSemigroup& S) {
  if (!S.zero()) throw std::runtime_error("host has no zero");
  int z = *S.zero(), n = S.order();
  std::vector<int> block(n);
  std::vector<int> reps;
  for (int s = 0; s < n; ++s) {
    int found = -1;
    for (size_t r = 0; r < reps.size(); ++r) {
      int t = reps[r];
      bool same = true;
      for (int a = 0; a < n && same; ++a)
        for (int b = 0; b < n && same; ++b) {
          bool sz = S.product(S.product(a, s), b) == z;
          bool tz = S.product(S.product(a, t), b) == z;
          if (sz != tz) same = false;
        }
      if (same) {
        found = static_cast<int>(r);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(reps.size());
      reps.push_back(s);
    }
    block[s] = found;
  }
  return block;
}

}  // namespace oracle

#endif
