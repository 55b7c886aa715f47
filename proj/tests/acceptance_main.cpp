// Acceptance gate: ten checks, one PASS/FAIL line each, nonzero exit on
// any failure.  argv: <cli-binary> <fixtures-dir> <scratch-dir>.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fixtures.hpp"
#include "iskit/action.hpp"
#include "iskit/congruence.hpp"
#include "iskit/constructions.hpp"
#include "iskit/errors.hpp"
#include "iskit/homomorphism.hpp"
#include "iskit/inverse_semigroup.hpp"
#include "iskit/partial_bijection.hpp"
#include "iskit/predicates.hpp"
#include "iskit/relation.hpp"
#include "iskit/representations.hpp"
#include "iskit/semilattice.hpp"

namespace fs = std::filesystem;
using iskit::Congruence;
using iskit::FiniteInvSemigroup;
using iskit::PartialBijection;
using iskit::Partition;

namespace {

void check(bool ok, const std::string& msg) {
  if (!ok) throw std::runtime_error(msg);
}

long long closed_form_order(int n) {
  // sum over k of C(n,k)^2 k!
  std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j)
      c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
  }
  long long total = 0, fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    total += c[n][k] * c[n][k] * fact;
  }
  return total;
}

int run_command(const std::string& cmd) {
  int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

struct Gate {
  int failures = 0;
  void run(int n, const std::string& name, const std::function<void()>& body) {
    try {
      body();
      std::cout << "PASS criterion " << n << ": " << name << '\n';
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << n << ": " << name << ": " << e.what()
                << '\n';
    }
  }
};

const Congruence* least_group_congruence(const FiniteInvSemigroup& S,
                                         const std::vector<Congruence>& all) {
  std::vector<const Congruence*> group_ones;
  for (const auto& c : all)
    if (iskit::is_group(iskit::quotient(S, c))) group_ones.push_back(&c);
  for (const Congruence* cand : group_ones) {
    bool least = true;
    for (const Congruence* other : group_ones)
      if (!cand->partition().refines(other->partition())) least = false;
    if (least) return cand;
  }
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::cerr << "usage: acceptance <cli-binary> <fixtures-dir> <scratch-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path fixture_dir = argv[2];
  const fs::path scratch = argv[3];
  fs::create_directories(scratch);

  Gate gate;

  gate.run(1, "partial bijection monoid sizes match the closed form", [] {
    const long long expect_order[] = {2, 7, 34};
    const int expect_idem[] = {2, 4, 8};
    for (int n = 1; n <= 3; ++n) {
      auto maps = iskit::symmetric_inverse_monoid(n);
      check(closed_form_order(n) == expect_order[n - 1],
            "closed form disagrees with the frozen count");
      check(static_cast<long long>(maps.size()) == expect_order[n - 1],
            "wrong monoid order at n=" + std::to_string(n));
      int idem = 0;
      for (const auto& f : maps)
        if (compose(f, f) == f) ++idem;
      check(idem == expect_idem[n - 1],
            "wrong idempotent count at n=" + std::to_string(n));
    }
  });

  gate.run(2, "idempotents commute everywhere and the left-zero table is refused", [] {
    for (const auto& [name, S] : fix::standard())
      for (int e : S.idempotents())
        for (int f : S.idempotents())
          check(S.product(e, f) == S.product(f, e),
                name + ": idempotents fail to commute");
    std::string message;
    try {
      iskit::from_cayley_table({{0, 0}, {1, 1}}, {"a", "b"});
    } catch (const iskit::InvalidInputError& e) {
      message = e.what();
    }
    check(message.find("idempotents do not commute") != std::string::npos,
          "left-zero table produced no commutation witness");
    check(message.find("a") != std::string::npos &&
              message.find("b") != std::string::npos,
          "witness does not name the offending idempotents");
  });

  gate.run(3, "the regular representation is faithful and multiplicative", [] {
    for (const auto& [name, S] : fix::standard()) {
      check(S.order() <= 60, name + ": fixture exceeds the sweep bound");
      auto rep = iskit::wagner_preston(S);
      for (int a = 0; a < S.order(); ++a)
        for (int b = 0; b < S.order(); ++b) {
          if (a < b)
            check(!(rep.images[a] == rep.images[b]),
                  name + ": representation is not injective");
          check(compose(rep.images[a], rep.images[b]) ==
                    rep.images[S.product(a, b)],
                name + ": representation breaks a product");
        }
    }
  });

  gate.run(4, "the group reflection matches enumeration; unitary tests agree", [] {
    int enumerated = 0;
    for (const auto& [name, S] : fix::standard()) {
      Congruence s = iskit::sigma(S);
      if (S.order() <= 12) {
        auto all = iskit::enumerate_congruences(S, 12);
        const Congruence* least = least_group_congruence(S, all);
        check(least != nullptr, name + ": no least group congruence found");
        check(least->partition() == s.partition(),
              name + ": scan disagrees with enumeration");
        ++enumerated;
      }
      bool unitary = iskit::is_E_unitary(S);
      iskit::Relation comp = iskit::compatibility(S);
      bool transitive = comp.is_transitive();
      bool pure = iskit::is_idempotent_pure(S, s);
      bool collapse = s.partition().to_relation() == comp;
      check(unitary == transitive && transitive == pure && pure == collapse,
            name + ": the four unitary characterizations disagree");
    }
    check(enumerated >= 10, "fewer than 10 fixtures in the enumeration sweep");
  });

  gate.run(5, "conjugation on idempotents has kernel mu and the expected images", [] {
    for (const auto& [name, S] : fix::standard()) {
      auto rep = iskit::munn_representation(S);
      iskit::UnionFind uf(S.order());
      bool injective = true;
      for (int a = 0; a < S.order(); ++a)
        for (int b = a + 1; b < S.order(); ++b)
          if (rep.delta[a] == rep.delta[b]) {
            uf.unite(a, b);
            injective = false;
          }
      check(Partition::from_union_find(uf) == iskit::mu(S).partition(),
            name + ": kernel of the conjugation map is not mu");
      check(injective == iskit::is_fundamental(S),
            name + ": injectivity disagrees with fundamentality");
    }
    auto t_diamond = iskit::munn_semigroup(fix::diamond_lattice());
    check(t_diamond.order() == 5, "diamond skeleton has the wrong order");
    check(iskit::are_isomorphic(t_diamond, fix::brandt2()),
          "diamond skeleton is not the 5-element combinatorial semigroup");
    auto base = iskit::semilattice_of_idempotents(fix::i2());
    auto t_bool = iskit::munn_semigroup(base.lattice);
    check(t_bool.order() == 7, "boolean skeleton has the wrong order");
    check(iskit::are_isomorphic(t_bool, fix::i2()),
          "boolean skeleton is not the full partial bijection monoid");
  });

  gate.run(6, "the congruence-freeness test agrees with brute-force counting", [] {
    bool saw_positive = false, saw_i2 = false, saw_chain = false;
    for (const auto& [name, S] : fix::standard()) {
      if (!S.zero().has_value() || S.order() > 12) continue;
      bool predicate = iskit::is_congruence_free(S);
      bool brute = iskit::enumerate_congruences(S, 12).size() == 2;
      check(predicate == brute, name + ": predicate disagrees with counting");
      if (name == "brandt2") {
        check(predicate, "the 5-element combinatorial semigroup must pass");
        saw_positive = true;
      }
      if (name == "i2") {
        check(!predicate, "the full partial bijection monoid must fail");
        saw_i2 = true;
      }
      if (name == "chain3") {
        check(!predicate, "the 3-chain must fail");
        saw_chain = true;
      }
    }
    check(saw_positive && saw_i2 && saw_chain,
          "required example fixtures missing from the sweep");
  });

  gate.run(7, "group presheaves survive the round trip through gluing", [] {
    std::vector<iskit::PresheafOfGroups> sheaves = {
        fix::presheaf_clifford3(), fix::presheaf_z2z2_id(),
        fix::presheaf_z2z2_const(), fix::presheaf_diamond5(),
        fix::presheaf_chain3()};
    check(sheaves.size() >= 5, "too few presheaf fixtures");
    bool saw_nontrivial_map = false;
    for (const auto& P : sheaves) {
      for (const auto& row : P.restriction)
        for (const auto& rho : row)
          for (size_t i = 0; i < rho.size(); ++i)
            if (rho[i] != static_cast<int>(i)) saw_nontrivial_map = true;
      auto S = iskit::clifford_from_presheaf(P);
      auto back = iskit::presheaf_from_clifford(S);
      check(iskit::are_isomorphic(iskit::clifford_from_presheaf(back), S),
            "round trip lost the glued semigroup");
    }
    check(saw_nontrivial_map, "no fixture exercises a nonidentity restriction");
  });

  gate.run(8, "the six semidirect tests agree, with witnesses where they pass", [] {
    for (const auto& [name, S] : fix::standard()) {
      auto rec = iskit::semidirect_recognition(S);
      bool flags[] = {rec.by_isomorphism_search,
                      rec.by_unitary_cover,
                      rec.by_min_group_star_bijective,
                      rec.by_some_group_star_bijective,
                      rec.by_domain_pairing,
                      rec.by_range_pairing};
      for (bool f : flags)
        check(f == rec.recognized(), name + ": recognition tests disagree");
    }

    auto S = fix::semidirect6();
    auto rec = iskit::semidirect_recognition(S);
    check(rec.recognized() && rec.witness.has_value(),
          "the designed product is not recognized");
    const auto& W = *rec.witness;
    check(W.product.order() == S.order(), "witness product has wrong order");
    std::set<int> image(W.isomorphism.begin(), W.isomorphism.end());
    check(static_cast<int>(image.size()) == S.order(),
          "witness map is not a bijection");
    for (int a = 0; a < S.order(); ++a)
      for (int b = 0; b < S.order(); ++b)
        check(W.isomorphism[S.product(a, b)] ==
                  W.product.product(W.isomorphism[a], W.isomorphism[b]),
              "witness map breaks a product");

    auto reject_b2 = iskit::semidirect_recognition(fix::brandt2());
    check(!reject_b2.recognized() && !reject_b2.witness.has_value(),
          "the combinatorial 5-element semigroup must be rejected");
    auto hard = fix::clifford_diamond5();
    check(iskit::is_clifford(hard), "the hard negative should be Clifford");
    auto reject_clifford = iskit::semidirect_recognition(hard);
    check(!reject_clifford.recognized(),
          "the non-product Clifford fixture must be rejected");
  });

  gate.run(9, "transitive actions are coset actions; stabilizers conjugate", [] {
    auto S = fix::i2();
    auto A = iskit::natural_action(S);
    auto eq = iskit::canonical_equivalence(S, A, 0);
    int m = static_cast<int>(eq.cosets.cosets.size());
    check(m == A.num_points, "coset count differs from the point count");
    std::set<int> hit(eq.point_to_coset.begin(), eq.point_to_coset.end());
    check(static_cast<int>(hit.size()) == m, "point map is not a bijection");
    for (int s = 0; s < S.order(); ++s)
      for (int x = 0; x < A.num_points; ++x) {
        bool here = A.defined(s, x);
        bool there = eq.target.defined(s, eq.point_to_coset[x]);
        check(here == there, "definedness is not preserved");
        if (here)
          check(eq.point_to_coset[A.apply(s, x)] ==
                    eq.target.apply(s, eq.point_to_coset[x]),
                "the bijection is not equivariant");
      }

    for (const auto& [name, T] : fix::standard()) {
      for (int e : T.idempotents()) {
        auto H = iskit::upward_closure(T, {e});
        if (!iskit::is_proper_closed_inverse_subsemigroup(T, H)) continue;
        auto cs = iskit::coset_space(T, H);
        for (size_t i = 0; i < cs.cosets.size(); ++i)
          for (size_t j = i + 1; j < cs.cosets.size(); ++j) {
            std::vector<int> common;
            std::ranges::set_intersection(cs.cosets[i], cs.cosets[j],
                                          std::back_inserter(common));
            check(common.empty(), name + ": distinct cosets overlap");
          }
      }
    }

    auto H0 = iskit::stabilizer(S, A, 0);
    auto H1 = iskit::stabilizer(S, A, 1);
    auto witness = iskit::are_conjugate(S, H0, H1);
    check(witness.has_value(), "point stabilizers are not conjugate");
    int nil = -1;
    auto target = PartialBijection::from_pairs(2, {{0, 1}});
    for (int s = 0; s < S.order(); ++s)
      if (S.maps()[s] == target) nil = s;
    check(nil >= 0, "the witness map is missing from the monoid");
    for (int h : H0) {
      int moved = S.product(S.product(nil, h), S.inverse(nil));
      check(std::ranges::binary_search(H1, moved),
            "conjugation does not carry the stabilizer over");
    }
    for (int k : H1) {
      int moved = S.product(S.product(S.inverse(nil), k), nil);
      check(std::ranges::binary_search(H0, moved),
            "conjugation does not carry the stabilizer back");
    }
  });

  gate.run(10, "the command line is deterministic and its output re-parses", [&] {
    std::vector<fs::path> fixtures;
    for (const auto& entry : fs::directory_iterator(fixture_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".isk")
        fixtures.push_back(entry.path());
    std::sort(fixtures.begin(), fixtures.end());
    check(fixtures.size() >= 10, "fewer than 10 fixture documents");

    const fs::path out1 = scratch / "analyze_first.txt";
    const fs::path out2 = scratch / "analyze_second.txt";
    const fs::path derived = scratch / "derived.isk";
    const fs::path devnull = "/dev/null";
    int round_trips = 0;

    for (const auto& f : fixtures) {
      std::string base = cli + " analyze " + quoted(f.string());
      check(run_command(base + " > " + quoted(out1.string()) + " 2> " +
                        quoted(devnull.string())) == 0,
            f.filename().string() + ": analyze failed");
      check(run_command(base + " > " + quoted(out2.string()) + " 2> " +
                        quoted(devnull.string())) == 0,
            f.filename().string() + ": second analyze failed");
      std::string first = slurp(out1), second = slurp(out2);
      check(!first.empty(), f.filename().string() + ": empty report");
      check(first == second,
            f.filename().string() + ": analyze output is not reproducible");

      auto derive = [&](const std::string& args, const std::string& recheck,
                        bool may_need_zero) {
        int rc = run_command(cli + " " + args + " " + quoted(f.string()) +
                             " > " + quoted(derived.string()) + " 2> " +
                             quoted(devnull.string()));
        if (may_need_zero && rc == 2) return;  // construction needs a zero
        check(rc == 0, f.filename().string() + ": " + args + " failed");
        check(run_command(cli + " " + recheck + " check " +
                          quoted(derived.string()) + " > " +
                          quoted(devnull.string()) + " 2> " +
                          quoted(devnull.string())) == 0,
              f.filename().string() + ": " + args + " output does not re-parse");
        ++round_trips;
      };
      derive("quotient sigma", "", false);
      derive("quotient mu", "", false);
      derive("quotient xi", "", true);
      derive("embed wagner-preston", "--max-carrier 64", false);
      derive("embed munn", "--max-carrier 16", false);
    }
    check(round_trips >= 4 * static_cast<int>(fixtures.size()),
          "too few derived documents re-validated");

    const fs::path bad_dir = fixture_dir / "bad";
    int rejected = 0;
    if (fs::exists(bad_dir))
      for (const auto& entry : fs::directory_iterator(bad_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".isk") {
          check(run_command(cli + " analyze " + quoted(entry.path().string()) +
                            " > " + quoted(devnull.string()) + " 2> " +
                            quoted(devnull.string())) == 2,
                entry.path().filename().string() +
                    ": invalid document not rejected with exit 2");
          ++rejected;
        }
    check(rejected >= 5, "too few invalid documents exercised");
  });

  if (gate.failures > 0) {
    std::cout << gate.failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
