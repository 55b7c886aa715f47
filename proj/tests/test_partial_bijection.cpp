#include "doctest.h"

#include <algorithm>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "iskit/errors.hpp"
#include "iskit/partial_bijection.hpp"
#include "oracle.hpp"

using iskit::PartialBijection;

namespace {

bool graph_contained(const PartialBijection& f, const PartialBijection& g) {
  for (int x = 0; x < f.carrier_size(); ++x)
    if (f.defined_at(x) && g.apply(x) != f.apply(x)) return false;
  return true;
}

// union of graphs is a well-defined injective partial map
bool union_is_partial_bijection(const PartialBijection& f,
                                const PartialBijection& g) {
  std::vector<int> u(f.carrier_size(), PartialBijection::kUndefined);
  for (int x = 0; x < f.carrier_size(); ++x) {
    for (const auto* m : {&f, &g}) {
      if (!m->defined_at(x)) continue;
      if (u[x] != PartialBijection::kUndefined && u[x] != m->apply(x))
        return false;
      u[x] = m->apply(x);
    }
  }
  return oracle::map_injective(u);
}

}  // namespace

TEST_CASE("construction, domain, image and literals") {
  auto f = PartialBijection::from_pairs(3, {{0, 2}, {1, 0}});
  REQUIRE(f.carrier_size() == 3);
  REQUIRE(f.domain() == std::vector<int>{0, 1});
  REQUIRE(f.image() == std::vector<int>{0, 2});
  REQUIRE(f.rank() == 2);
  REQUIRE(f.apply(0) == 2);
  REQUIRE(f.apply(1) == 0);
  REQUIRE(!f.defined_at(2));
  REQUIRE(f.to_literal() == "[0>2 1>0]");

  auto e = PartialBijection::empty_map(3);
  REQUIRE(e.rank() == 0);
  REQUIRE(e.to_literal() == "[]");
  REQUIRE(e.is_idempotent());

  auto id = PartialBijection::identity(3);
  REQUIRE(id.is_total());
  REQUIRE(id.is_idempotent());

  auto sub = PartialBijection::identity_on(4, {1, 3});
  REQUIRE(sub.domain() == std::vector<int>{1, 3});
  REQUIRE(sub.image() == std::vector<int>{1, 3});
  REQUIRE(sub.is_idempotent());
}

TEST_CASE("construction rejects non-injective and out-of-range data") {
  REQUIRE_THROWS_AS(PartialBijection({0, 0}), iskit::InvalidInputError);
  REQUIRE_THROWS_AS(PartialBijection({2, 0}), iskit::InvalidInputError);
  REQUIRE_THROWS_AS(PartialBijection::from_pairs(2, {{0, 1}, {1, 1}}),
                    iskit::InvalidInputError);
  REQUIRE_THROWS_AS(PartialBijection::from_pairs(2, {{0, 0}, {0, 1}}),
                    iskit::InvalidInputError);
  REQUIRE_THROWS_AS(PartialBijection::from_pairs(2, {{0, 5}}),
                    iskit::InvalidInputError);
  REQUIRE_THROWS_AS(PartialBijection::identity_on(2, {3}),
                    iskit::InvalidInputError);
}

TEST_CASE("composition acts right factor first") {
  auto f = PartialBijection::from_pairs(2, {{0, 1}});
  auto g = PartialBijection::from_pairs(2, {{1, 0}});
  REQUIRE(compose(f, g) == PartialBijection::from_pairs(2, {{1, 1}}));
  REQUIRE(compose(g, f) == PartialBijection::from_pairs(2, {{0, 0}}));

  // domain of fg is g⁻¹(dom f ∩ im g)
  auto h = PartialBijection::from_pairs(3, {{0, 2}, {1, 0}});
  auto k = PartialBijection::from_pairs(3, {{2, 1}});
  REQUIRE(compose(h, k) == PartialBijection::from_pairs(3, {{2, 0}}));
  REQUIRE(compose(h, PartialBijection::empty_map(3)).rank() == 0);
}

TEST_CASE("inversion reverses the graph") {
  auto f = PartialBijection::from_pairs(3, {{0, 2}, {1, 0}});
  REQUIRE(invert(f) == PartialBijection::from_pairs(3, {{2, 0}, {0, 1}}));
  REQUIRE(invert(invert(f)) == f);
  REQUIRE(invert(PartialBijection::empty_map(3)) ==
          PartialBijection::empty_map(3));
}

TEST_CASE("monoid orders match the closed count formula") {
  // Σ_k C(n,k)² k! and the enumerator must agree
  std::vector<long long> expected = {1, 2, 7, 34, 209, 1546};
  REQUIRE(oracle::partial_bijection_count(0) == 1);
  for (int n = 1; n <= 5; ++n) {
    REQUIRE(oracle::partial_bijection_count(n) == expected[n]);
    auto all = iskit::symmetric_inverse_monoid(n);
    REQUIRE(static_cast<long long>(all.size()) == expected[n]);
    std::set<PartialBijection> dedup(all.begin(), all.end());
    REQUIRE(dedup.size() == all.size());
  }
  REQUIRE_THROWS_AS(iskit::symmetric_inverse_monoid(6),
                    iskit::CapExceededError);
}

TEST_CASE("idempotents are exactly the partial identities") {
  for (int n = 1; n <= 3; ++n) {
    int count = 0;
    for (const auto& f : iskit::symmetric_inverse_monoid(n)) {
      bool alg = compose(f, f) == f;
      REQUIRE(f.is_idempotent() == alg);
      if (alg) {
        ++count;
        REQUIRE(f == PartialBijection::identity_on(n, f.domain()));
      }
    }
    REQUIRE(count == (1 << n));  // one per subset of the carrier
  }
}

TEST_CASE("composition is associative and inversion is an involution") {
  auto all = iskit::symmetric_inverse_monoid(3);
  for (const auto& f : all)
    for (const auto& g : all) {
      REQUIRE(invert(compose(f, g)) == compose(invert(g), invert(f)));
      REQUIRE(compose(compose(f, invert(f)), f) == f);
      for (const auto& h : all)
        REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("idempotents commute and meet at domain intersections") {
  auto all = iskit::symmetric_inverse_monoid(3);
  for (const auto& e : all) {
    if (!e.is_idempotent()) continue;
    for (const auto& f : all) {
      if (!f.is_idempotent()) continue;
      auto ef = compose(e, f);
      REQUIRE(ef == compose(f, e));
      std::vector<int> inter;
      std::ranges::set_intersection(e.domain(), f.domain(),
                                    std::back_inserter(inter));
      REQUIRE(ef == PartialBijection::identity_on(3, inter));
    }
  }
}

TEST_CASE("restriction order is graph containment") {
  auto all = iskit::symmetric_inverse_monoid(3);
  for (const auto& f : all)
    for (const auto& g : all) {
      bool leq = restriction_leq(f, g);
      REQUIRE(leq == graph_contained(f, g));
      // algebraic form: f = g restricted to dom f
      REQUIRE(leq == (compose(g, compose(invert(f), f)) == f));
    }
  REQUIRE(restriction_leq(PartialBijection::empty_map(3),
                          PartialBijection::identity(3)));
  REQUIRE(!restriction_leq(PartialBijection::identity(3),
                           PartialBijection::empty_map(3)));
}

TEST_CASE("meet is the largest common restriction") {
  auto id = PartialBijection::identity(2);
  auto e0 = PartialBijection::from_pairs(2, {{0, 0}});
  REQUIRE(meet(id, e0) == e0);
  REQUIRE(meet(e0, PartialBijection::from_pairs(2, {{1, 1}})) ==
          PartialBijection::empty_map(2));

  auto all = iskit::symmetric_inverse_monoid(3);
  for (const auto& f : all)
    for (const auto& g : all) {
      auto m = meet(f, g);
      REQUIRE(restriction_leq(m, f));
      REQUIRE(restriction_leq(m, g));
      for (const auto& h : all)
        if (restriction_leq(h, f) && restriction_leq(h, g))
          REQUIRE(restriction_leq(h, m));
    }
}

TEST_CASE("compatibility means the union is again a partial bijection") {
  auto all = iskit::symmetric_inverse_monoid(3);
  for (const auto& f : all)
    for (const auto& g : all) {
      bool oracle_ok = union_is_partial_bijection(f, g);
      REQUIRE(iskit::compatible(f, g) == oracle_ok);
      auto j = iskit::join_compatible({f, g});
      REQUIRE(j.has_value() == oracle_ok);
      if (j) {
        REQUIRE(restriction_leq(f, *j));
        REQUIRE(restriction_leq(g, *j));
        // graphs unite, so ranks obey inclusion-exclusion
        REQUIRE(j->rank() == f.rank() + g.rank() - meet(f, g).rank());
      }
    }
}

TEST_CASE("joins cover several maps at once") {
  auto e0 = PartialBijection::from_pairs(2, {{0, 0}});
  auto e1 = PartialBijection::from_pairs(2, {{1, 1}});
  auto j = iskit::join_compatible({e0, e1});
  REQUIRE(j.has_value());
  REQUIRE(*j == PartialBijection::identity(2));

  auto a = PartialBijection::from_pairs(2, {{0, 0}});
  auto b = PartialBijection::from_pairs(2, {{0, 1}});
  REQUIRE(!iskit::join_compatible({a, b}).has_value());
  // injectivity failure, not just functional conflict
  auto c = PartialBijection::from_pairs(2, {{0, 1}});
  auto d = PartialBijection::from_pairs(2, {{1, 1}});
  REQUIRE(!iskit::join_compatible({c, d}).has_value());
}

TEST_CASE("generated closures match an independent fixpoint scan") {
  // one nilpotent map on two points
  std::vector<oracle::Map> gens1 = {{1, -1}};
  auto maps1 = oracle::closure(gens1);
  REQUIRE(maps1.size() == 5);

  // symmetric group element plus a rank-one idempotent on two points
  std::vector<oracle::Map> gens2 = {{1, 0}, {0, -1}};
  REQUIRE(oracle::closure(gens2).size() == 7);

  // the full monoid on three points from a classical generating set
  std::vector<oracle::Map> gens3 = {{1, 2, 0}, {1, 0, 2}, {-1, 1, 2}};
  auto maps3 = oracle::closure(gens3);
  REQUIRE(maps3.size() == 34);
  std::set<oracle::Map> lib;
  for (const auto& f : iskit::symmetric_inverse_monoid(3))
    lib.insert(f.images());
  REQUIRE(lib == maps3);
}

TEST_CASE("hashing distinguishes all maps on a small carrier") {
  std::unordered_set<PartialBijection> seen;
  for (const auto& f : iskit::symmetric_inverse_monoid(3)) seen.insert(f);
  REQUIRE(seen.size() == 34);
  REQUIRE(seen.count(PartialBijection::identity(3)) == 1);
}
