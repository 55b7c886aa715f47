#include "iskit/homomorphism.hpp"

#include <algorithm>

#include "iskit/errors.hpp"
#include "iskit/green.hpp"

namespace iskit {

Homomorphism make_homomorphism(FiniteInvSemigroup source,
                               FiniteInvSemigroup target,
                               std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.order())
    throw InvalidInputError("map size does not match source order");
  for (int v : map)
    if (v < 0 || v >= target.order())
      throw InvalidInputError("map image out of range");
  for (int a = 0; a < source.order(); ++a)
    for (int b = 0; b < source.order(); ++b)
      if (map[source.product(a, b)] != target.product(map[a], map[b]))
        throw InvalidInputError("map does not preserve products");
  if (source.zero() && target.zero() && map[*source.zero()] != *target.zero())
    throw InvalidInputError("map does not preserve the zero");
  if (source.identity() && target.identity() &&
      map[*source.identity()] != *target.identity())
    throw InvalidInputError("map does not preserve the identity");
  return Homomorphism{std::move(source), std::move(target), std::move(map)};
}

Congruence relation_kernel(const Homomorphism& theta) {
  int m = theta.source.order();
  std::vector<int> block(m);
  for (int s = 0; s < m; ++s) block[s] = theta.map[s];
  return Congruence::checked(theta.source,
                             Partition::from_block_ids(std::move(block)));
}

NormalSubsemigroup kernel_of_hom(const Homomorphism& theta) {
  std::vector<int> elems;
  for (int s = 0; s < theta.source.order(); ++s)
    if (theta.target.is_idempotent(theta.map[s])) elems.push_back(s);
  return make_normal_subsemigroup(theta.source, std::move(elems));
}

bool is_idempotent_separating(const Homomorphism& theta) {
  const auto& idem = theta.source.idempotents();
  for (size_t i = 0; i < idem.size(); ++i)
    for (size_t j = i + 1; j < idem.size(); ++j)
      if (theta.map[idem[i]] == theta.map[idem[j]]) return false;
  return true;
}

bool is_injective(const Homomorphism& theta) {
  std::vector<char> hit(theta.target.order(), 0);
  for (int v : theta.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

bool is_surjective(const Homomorphism& theta) {
  std::vector<char> hit(theta.target.order(), 0);
  for (int v : theta.map) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

StarMapReport star_maps(const Homomorphism& theta) {
  const FiniteInvSemigroup& S = theta.source;
  const FiniteInvSemigroup& T = theta.target;

  // L-classes are indexed by the domain idempotent
  bool inj = true, surj = true;
  std::vector<std::vector<int>> l_class_T(T.order());
  for (int t = 0; t < T.order(); ++t) l_class_T[T.d(t)].push_back(t);

  std::vector<std::vector<int>> l_class_S(S.order());
  for (int s = 0; s < S.order(); ++s) l_class_S[S.d(s)].push_back(s);

  for (int e = 0; e < S.order(); ++e) {
    const auto& cls = l_class_S[e];
    if (cls.empty()) continue;
    std::vector<int> images;
    for (int s : cls) images.push_back(theta.map[s]);
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      inj = false;
    const auto& target_cls = l_class_T[T.d(theta.map[cls.front()])];
    for (int t : target_cls)
      if (!std::binary_search(sorted.begin(), sorted.end(), t)) {
        surj = false;
        break;
      }
  }

  // star-injectivity has two more faces: idempotent preimages are
  // idempotent, and the relation kernel sits inside compatibility
  bool pure = true;
  for (int s = 0; s < S.order(); ++s)
    if (T.is_idempotent(theta.map[s]) && !S.is_idempotent(s)) pure = false;

  Relation compat = compatibility(S);
  bool within = true;
  for (int s = 0; s < S.order() && within; ++s)
    for (int t = 0; t < S.order(); ++t)
      if (theta.map[s] == theta.map[t] && !compat.at(s, t)) {
        within = false;
        break;
      }

  if (inj != pure || inj != within)
    throw InternalCheckError("star-injectivity characterizations disagree");
  return {inj, surj};
}

Homomorphism quotient_hom(const FiniteInvSemigroup& S, const Congruence& rho) {
  FiniteInvSemigroup Q = quotient(S, rho);
  std::vector<int> map(S.order());
  for (int s = 0; s < S.order(); ++s) map[s] = rho.block_of(s);
  return make_homomorphism(S, std::move(Q), std::move(map));
}

Homomorphism induced_group_hom(const Homomorphism& theta) {
  Congruence sig_s = sigma(theta.source);
  Congruence sig_t = sigma(theta.target);
  FiniteInvSemigroup QS = quotient(theta.source, sig_s);
  FiniteInvSemigroup QT = quotient(theta.target, sig_t);
  std::vector<int> psi(QS.order(), -1);
  for (int s = 0; s < theta.source.order(); ++s) {
    int from = sig_s.block_of(s);
    int to = sig_t.block_of(theta.map[s]);
    if (psi[from] == -1) psi[from] = to;
    else if (psi[from] != to)
      throw InternalCheckError("induced group map is not well defined");
  }
  return make_homomorphism(std::move(QS), std::move(QT), std::move(psi));
}

namespace {

// cheap isomorphism invariants of a single element
struct Profile {
  bool idem;
  bool self_inverse;
  int down, up, l_size, r_size, d_size, index, period;

  bool operator==(const Profile&) const = default;
};

std::vector<Profile> profiles(const FiniteInvSemigroup& S) {
  int m = S.order();
  GreenData G = green_relations(S);
  std::vector<int> l_count(m, 0), r_count(m, 0), d_count(m, 0);
  for (int s = 0; s < m; ++s) {
    l_count[G.L.block_of(s)]++;
    r_count[G.R.block_of(s)]++;
    d_count[G.D.block_of(s)]++;
  }
  std::vector<Profile> out(m);
  for (int s = 0; s < m; ++s) {
    Profile& p = out[s];
    p.idem = S.is_idempotent(s);
    p.self_inverse = S.inverse(s) == s;
    p.down = p.up = 0;
    for (int t = 0; t < m; ++t) {
      if (S.leq(t, s)) ++p.down;
      if (S.leq(s, t)) ++p.up;
    }
    p.l_size = l_count[G.L.block_of(s)];
    p.r_size = r_count[G.R.block_of(s)];
    p.d_size = d_count[G.D.block_of(s)];
    // index and period of the cyclic subsemigroup generated by s
    std::vector<int> seen_at(m, -1);
    int x = s, step = 0;
    while (seen_at[x] == -1) {
      seen_at[x] = step++;
      x = S.product(x, s);
    }
    p.index = seen_at[x];
    p.period = step - seen_at[x];
  }
  return out;
}

// greedy small generating set; elements with large downsets first
std::vector<int> generating_set(const FiniteInvSemigroup& S,
                                const std::vector<Profile>& prof) {
  std::vector<int> order(S.order());
  for (int i = 0; i < S.order(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (prof[a].down != prof[b].down) return prof[a].down > prof[b].down;
    return a < b;
  });
  std::vector<int> gens;
  std::vector<int> closed;
  for (int cand : order) {
    if (std::find(closed.begin(), closed.end(), cand) != closed.end())
      continue;
    gens.push_back(cand);
    closed = inverse_subsemigroup_generated(S, gens);
    if (static_cast<int>(closed.size()) == S.order()) break;
  }
  return gens;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteInvSemigroup& A,
                                                 const FiniteInvSemigroup& B) {
  int m = A.order();
  if (m != B.order()) return std::nullopt;
  std::vector<Profile> pa = profiles(A), pb = profiles(B);
  {
    auto key = [](const Profile& p) {
      return std::tuple(p.idem, p.self_inverse, p.down, p.up, p.l_size,
                        p.r_size, p.d_size, p.index, p.period);
    };
    std::vector<decltype(key(pa[0]))> ka, kb;
    for (auto& p : pa) ka.push_back(key(p));
    for (auto& p : pb) kb.push_back(key(p));
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return std::nullopt;
  }

  std::vector<int> gens = generating_set(A, pa);
  int k = static_cast<int>(gens.size());

  // express every element of A as a word over gens and their inverses
  std::vector<int> alphabet;
  for (int g : gens) alphabet.push_back(g);
  for (int g : gens)
    if (std::find(alphabet.begin(), alphabet.end(), A.inverse(g)) ==
        alphabet.end())
      alphabet.push_back(A.inverse(g));
  std::vector<int> via_parent(m, -1), via_letter(m, -1), bfs_order;
  {
    std::vector<char> seen(m, 0);
    std::vector<int> queue;
    for (size_t i = 0; i < alphabet.size(); ++i) {
      int g = alphabet[i];
      if (!seen[g]) {
        seen[g] = 1;
        via_letter[g] = static_cast<int>(i);
        queue.push_back(g);
      }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      bfs_order.push_back(x);
      for (size_t i = 0; i < alphabet.size(); ++i) {
        int y = A.product(x, alphabet[i]);
        if (!seen[y]) {
          seen[y] = 1;
          via_parent[y] = x;
          via_letter[y] = static_cast<int>(i);
          queue.push_back(y);
        }
      }
    }
    if (static_cast<int>(queue.size()) != m)
      throw InternalCheckError("generating set does not generate");
  }

  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i)
    for (int b = 0; b < m; ++b)
      if (pa[gens[i]] == pb[b]) candidates[i].push_back(b);

  std::vector<int> choice(k, -1);
  std::vector<int> img(m, -1);

  auto attempt = [&]() -> bool {
    std::fill(img.begin(), img.end(), -1);
    std::vector<int> letter_img(alphabet.size());
    for (size_t i = 0; i < alphabet.size(); ++i) {
      int a = alphabet[i];
      auto pos = std::find(gens.begin(), gens.end(), a);
      letter_img[i] = pos != gens.end()
                          ? choice[pos - gens.begin()]
                          : B.inverse(choice[std::find(gens.begin(), gens.end(),
                                                       A.inverse(a)) -
                                             gens.begin()]);
    }
    std::vector<char> used(m, 0);
    for (int x : bfs_order) {
      int value = via_parent[x] == -1
                      ? letter_img[via_letter[x]]
                      : B.product(img[via_parent[x]], letter_img[via_letter[x]]);
      img[x] = value;
      if (used[value]) return false;  // not injective
      used[value] = 1;
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (img[A.product(a, b)] != B.product(img[a], img[b])) return false;
    return true;
  };

  std::vector<int> stack_pos(k, 0);
  int depth = 0;
  while (depth >= 0) {
    if (depth == k) {
      if (attempt()) return img;
      --depth;
      continue;
    }
    if (stack_pos[depth] >= static_cast<int>(candidates[depth].size())) {
      stack_pos[depth] = 0;
      choice[depth] = -1;
      --depth;
      continue;
    }
    choice[depth] = candidates[depth][stack_pos[depth]++];
    ++depth;
  }
  return std::nullopt;
}

bool are_isomorphic(const FiniteInvSemigroup& A, const FiniteInvSemigroup& B) {
  return find_isomorphism(A, B).has_value();
}

}  // namespace iskit
