#include "iskit/representations.hpp"

#include <algorithm>
#include <unordered_map>

#include "iskit/errors.hpp"

namespace iskit {

WagnerPrestonRep wagner_preston(const FiniteInvSemigroup& S,
                                const ValidationOptions& opts) {
  int m = S.order();
  WagnerPrestonRep rep;
  rep.images.reserve(m);
  for (int a = 0; a < m; ++a) {
    std::vector<int> images(m, PartialBijection::kUndefined);
    for (int x = 0; x < m; ++x)
      if (S.product(S.d(a), x) == x) images[x] = S.product(a, x);
    rep.images.push_back(PartialBijection(std::move(images)));
  }

  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (rep.images[a] == rep.images[b])
        throw InternalCheckError("regular representation is not injective");

  if (m <= opts.exhaustive_limit) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (rep.images[S.product(a, b)] !=
            compose(rep.images[a], rep.images[b]))
          throw InternalCheckError(
              "regular representation does not preserve products");
  } else {
    uint64_t x = opts.sample_seed;
    auto next = [&x, m]() {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<int>((x >> 33) % static_cast<uint64_t>(m));
    };
    for (int i = 0; i < opts.sample_count; ++i) {
      int a = next(), b = next();
      if (rep.images[S.product(a, b)] != compose(rep.images[a], rep.images[b]))
        throw InternalCheckError(
            "regular representation does not preserve products");
    }
  }
  return rep;
}

namespace {

// all order isomorphisms ideal(e) -> ideal(f), appended in lexicographic
// assignment order
void order_isos(const SemilatticePoset& E, const std::vector<int>& dom,
                const std::vector<int>& ran, size_t at, std::vector<int>& img,
                std::vector<char>& used, std::vector<PartialBijection>& out) {
  if (at == dom.size()) {
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < dom.size(); ++i) pairs.emplace_back(dom[i], img[i]);
    out.push_back(PartialBijection::from_pairs(E.size(), pairs));
    return;
  }
  for (size_t c = 0; c < ran.size(); ++c) {
    if (used[c]) continue;
    bool ok = true;
    for (size_t i = 0; i < at && ok; ++i) {
      bool le1 = E.leq(dom[i], dom[at]), ge1 = E.leq(dom[at], dom[i]);
      bool le2 = E.leq(img[i], ran[c]), ge2 = E.leq(ran[c], img[i]);
      ok = le1 == le2 && ge1 == ge2;
    }
    if (!ok) continue;
    img[at] = ran[c];
    used[c] = 1;
    order_isos(E, dom, ran, at + 1, img, used, out);
    used[c] = 0;
  }
}

}  // namespace

FiniteInvSemigroup munn_semigroup(const SemilatticePoset& E, int cap) {
  if (E.size() > cap)
    throw CapExceededError("semilattice size " + std::to_string(E.size()) +
                           " exceeds cap " + std::to_string(cap));
  int n = E.size();
  std::vector<int> tops(n);
  for (int e = 0; e < n; ++e) tops[e] = e;
  std::sort(tops.begin(), tops.end(), [&](int a, int b) {
    size_t sa = E.principal_ideal(a).size(), sb = E.principal_ideal(b).size();
    if (sa != sb) return sa < sb;
    return a < b;
  });

  std::vector<PartialBijection> maps;
  for (int e : tops) {
    std::vector<int> dom = E.principal_ideal(e);
    for (int f : tops) {
      std::vector<int> ran = E.principal_ideal(f);
      if (dom.size() != ran.size()) continue;
      std::vector<int> img(dom.size());
      std::vector<char> used(ran.size(), 0);
      order_isos(E, dom, ran, 0, img, used, maps);
    }
  }
  return fis_from_maps(maps);
}

MunnRep munn_representation(const FiniteInvSemigroup& S) {
  IdempotentSemilattice base = semilattice_of_idempotents(S);
  const SemilatticePoset& E = base.lattice;
  int n = E.size();
  int m = S.order();

  std::vector<PartialBijection> delta;
  for (int s = 0; s < m; ++s) {
    std::vector<int> images(n, PartialBijection::kUndefined);
    for (int p = 0; p < n; ++p) {
      int e = base.element_of_point[p];
      if (!S.leq(e, S.d(s))) continue;
      int conj = S.product(S.product(s, e), S.inverse(s));
      images[p] = base.point_of_element[conj];
      if (images[p] == -1)
        throw InternalCheckError("conjugate of an idempotent not idempotent");
    }
    delta.push_back(PartialBijection(std::move(images)));
  }

  // each delta must be an order isomorphism between principal ideals
  for (int s = 0; s < m; ++s) {
    const PartialBijection& f = delta[s];
    std::vector<int> dom = f.domain();
    std::vector<int> expected = E.principal_ideal(
        base.point_of_element[S.d(s)]);
    std::vector<int> image = f.image();
    std::vector<int> expected_im = E.principal_ideal(
        base.point_of_element[S.r(s)]);
    if (dom != expected || image != expected_im)
      throw InternalCheckError("conjugation domain is not a principal ideal");
    for (int p : dom)
      for (int q : dom)
        if (E.leq(p, q) != E.leq(f.apply(p), f.apply(q)))
          throw InternalCheckError("conjugation does not preserve the order");
  }

  std::unordered_map<PartialBijection, int> index;
  std::vector<PartialBijection> distinct;
  std::vector<int> to_image(m);
  for (int s = 0; s < m; ++s) {
    auto it = index.find(delta[s]);
    if (it == index.end()) {
      it = index.emplace(delta[s], static_cast<int>(distinct.size())).first;
      distinct.push_back(delta[s]);
    }
    to_image[s] = it->second;
  }

  int k = static_cast<int>(distinct.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k, -1));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      int i = to_image[s], j = to_image[t];
      int via_host = to_image[S.product(s, t)];
      auto it = index.find(compose(distinct[i], distinct[j]));
      if (it == index.end() || it->second != via_host)
        throw InternalCheckError("conjugation image is not closed");
      table[i][j] = via_host;
    }
  FiniteInvSemigroup image = from_cayley_table(table, {}, distinct);

  // wide: every identity map of a principal ideal is hit by an idempotent
  for (int p = 0; p < n; ++p) {
    int e = base.element_of_point[p];
    PartialBijection ideal_id = PartialBijection::identity_on(
        n, E.principal_ideal(p));
    if (delta[e] != ideal_id)
      throw InternalCheckError("image misses a principal-ideal identity");
  }
  return MunnRep{std::move(base), std::move(delta), std::move(image),
                 std::move(to_image)};
}

std::string SpaceRealizationReport::summary() const {
  auto word = [](bool b) { return b ? "yes" : "no"; };
  std::string out;
  out += "base sets: " + std::to_string(base_set_count) + "\n";
  out += std::string("covers: ") + word(base_covers) + "\n";
  out += std::string("meet closed: ") + word(base_meet_closed) + "\n";
  out += std::string("points separated: ") + word(points_separated) + "\n";
  out += std::string("domains form the base: ") + word(domains_are_base) + "\n";
  out += std::string("open bijections: ") + word(open_bijections) + "\n";
  out += std::string("pass: ") + word(pass());
  return out;
}

SpaceRealizationReport t0_realization_check(const FiniteInvSemigroup& S) {
  if (!is_fundamental(S))
    throw InvalidInputError("space realization requires a fundamental host");
  MunnRep rep = munn_representation(S);
  const SemilatticePoset& E = rep.base.lattice;
  int n = E.size();

  std::vector<std::vector<int>> base;
  for (int p = 0; p < n; ++p) base.push_back(E.principal_ideal(p));

  SpaceRealizationReport out;
  out.base_set_count = static_cast<int>(base.size());

  out.base_covers = true;
  for (int p = 0; p < n; ++p) {
    bool found = false;
    for (const auto& B : base)
      if (std::binary_search(B.begin(), B.end(), p)) { found = true; break; }
    out.base_covers = out.base_covers && found;
  }

  out.base_meet_closed = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      std::vector<int> cap;
      std::set_intersection(base[p].begin(), base[p].end(), base[q].begin(),
                            base[q].end(), std::back_inserter(cap));
      if (cap != base[E.meet(p, q)]) out.base_meet_closed = false;
    }

  out.points_separated = true;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      bool split = false;
      for (const auto& B : base) {
        bool inp = std::binary_search(B.begin(), B.end(), p);
        bool inq = std::binary_search(B.begin(), B.end(), q);
        if (inp != inq) { split = true; break; }
      }
      out.points_separated = out.points_separated && split;
    }

  std::vector<std::vector<int>> domains;
  for (const auto& f : rep.image.maps()) domains.push_back(f.domain());
  std::sort(domains.begin(), domains.end());
  domains.erase(std::unique(domains.begin(), domains.end()), domains.end());
  std::vector<std::vector<int>> sorted_base = base;
  std::sort(sorted_base.begin(), sorted_base.end());
  sorted_base.erase(std::unique(sorted_base.begin(), sorted_base.end()),
                    sorted_base.end());
  out.domains_are_base = domains == sorted_base;

  // the image of every base subset of the domain is again a base set
  out.open_bijections = true;
  for (const auto& f : rep.image.maps()) {
    for (int p = 0; p < n; ++p) {
      if (!f.defined_at(p)) continue;
      std::vector<int> forward;
      for (int q : base[p])
        if (f.defined_at(q)) forward.push_back(f.apply(q));
      std::sort(forward.begin(), forward.end());
      bool is_base = false;
      for (const auto& B : base)
        if (B == forward) { is_base = true; break; }
      out.open_bijections = out.open_bijections && is_base;
    }
  }
  return out;
}

ExtensionDecomposition extension_decomposition(const FiniteInvSemigroup& S) {
  NormalSubsemigroup kernel = centralizer_of_idempotents(S);
  // the centralizer is Clifford: its idempotents are E(S) and they are
  // central in it by construction; certify anyway
  for (int k : kernel.elements)
    for (int e : S.idempotents())
      if (S.product(k, e) != S.product(e, k))
        throw InternalCheckError("centralizer fails to centralize");

  MunnRep rep = munn_representation(S);
  if (!is_fundamental(rep.image))
    throw InternalCheckError("conjugation image is not fundamental");

  std::vector<int> kernel_of_proj;
  for (int s = 0; s < S.order(); ++s)
    if (rep.image.is_idempotent(rep.to_image[s])) kernel_of_proj.push_back(s);
  if (kernel_of_proj != kernel.elements)
    throw InternalCheckError(
        "projection kernel differs from the idempotent centralizer");

  return ExtensionDecomposition{std::move(kernel), std::move(rep.image),
                                std::move(rep.to_image)};
}

}  // namespace iskit
