#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "iskit/action.hpp"
#include "iskit/analyze.hpp"
#include "iskit/congruence.hpp"
#include "iskit/constructions.hpp"
#include "iskit/document.hpp"
#include "iskit/errors.hpp"
#include "iskit/green.hpp"
#include "iskit/homomorphism.hpp"
#include "iskit/predicates.hpp"
#include "iskit/representations.hpp"

using namespace iskit;

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_number(const std::string& t) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (...) {
    throw InvalidInputError("expected a number, got " + t);
  }
  if (used != t.size()) throw InvalidInputError("expected a number, got " + t);
  return v;
}

// An element is named by its exact label, by #index, or, when the
// semigroup carries concrete maps, by the map itself: "id", "empty", or
// pairs like 0->1+1->2.
int resolve_element(const FiniteInvSemigroup& S, const std::string& spec) {
  for (int i = 0; i < S.order(); ++i)
    if (S.label(i) == spec) return i;
  if (!spec.empty() && spec[0] == '#') {
    int k = parse_number(spec.substr(1));
    if (k < 0 || k >= S.order())
      throw InvalidInputError("element index out of range: " + spec);
    return k;
  }
  if (S.has_maps()) {
    int n = S.maps().front().carrier_size();
    std::optional<PartialBijection> target;
    if (spec == "empty") {
      target = PartialBijection::empty_map(n);
    } else if (spec == "id") {
      target = PartialBijection::identity(n);
    } else if (spec.find("->") != std::string::npos) {
      std::vector<std::pair<int, int>> pairs;
      for (const auto& part : split_list(spec, '+')) {
        auto arrow = part.find("->");
        if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= part.size())
          throw InvalidInputError("expected p->q in " + spec);
        pairs.emplace_back(parse_number(part.substr(0, arrow)),
                           parse_number(part.substr(arrow + 2)));
      }
      target = PartialBijection::from_pairs(n, pairs);
    }
    if (target) {
      for (int i = 0; i < S.order(); ++i)
        if (S.maps()[i] == *target) return i;
      throw InvalidInputError("no element is the map " + spec);
    }
  }
  if (spec == "id" && S.identity()) return *S.identity();
  throw InvalidInputError("unknown element " + spec);
}

std::vector<int> resolve_elements(const FiniteInvSemigroup& S,
                                  const std::string& list) {
  std::vector<int> out;
  for (const auto& spec : split_list(list, ','))
    out.push_back(resolve_element(S, spec));
  if (out.empty()) throw InvalidInputError("empty element list");
  return out;
}

void print_blocks(const FiniteInvSemigroup& S, const Partition& p) {
  for (const auto& block : p.blocks()) {
    std::cout << " {";
    for (size_t i = 0; i < block.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << S.label(block[i]);
    }
    std::cout << '}';
  }
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroup toolkit"};
  app.require_subcommand(1);

  BuildCaps caps;
  app.add_option("--max-order", caps.max_order,
                 "largest number of elements a closure may reach");
  app.add_option("--max-congruence-order", caps.max_congruence_order,
                 "largest order for full congruence enumeration");
  app.add_option("--max-carrier", caps.max_carrier,
                 "largest carrier for partial bijection closures");

  std::string file, subspec, idealspec;
  bool show_all = false;
  std::function<int()> run;

  auto load = [&]() { return build(parse_document(read_input(file)), caps); };
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "input document, or - for stdin")
        ->required();
    cmd->fallthrough();
  };

  auto* analyze = app.add_subcommand("analyze", "structural report");
  add_file(analyze);
  analyze->callback([&] {
    run = [&]() {
      std::cout << analyze_report(load(), caps);
      return 0;
    };
  });

  auto* quot = app.add_subcommand("quotient", "write a quotient's table");
  quot->require_subcommand(1);
  quot->fallthrough();
  for (const char* which : {"sigma", "mu", "xi"}) {
    auto* sub = quot->add_subcommand(
        which, std::string("by the ") +
                   (which[0] == 's'   ? "minimum group congruence"
                    : which[0] == 'm' ? "maximum idempotent-separating congruence"
                                      : "syntactic congruence of the zero"));
    add_file(sub);
    std::string name = which;
    sub->callback([&, name] {
      run = [&, name]() {
        auto obj = load();
        const auto& S = obj.semigroup;
        Congruence c = name == "sigma" ? sigma(S)
                       : name == "mu"  ? mu(S)
                                       : xi(S);
        std::cout << emit_cayley_table(quotient(S, c));
        return 0;
      };
    });
  }
  auto* rees = quot->add_subcommand("rees", "collapse an ideal to a zero");
  rees->add_option("--ideal", idealspec,
                   "comma-separated elements generating the ideal")
      ->required();
  add_file(rees);
  rees->callback([&] {
    run = [&]() {
      auto obj = load();
      const auto& S = obj.semigroup;
      std::set<int> ideal;
      for (int s : resolve_elements(S, idealspec))
        for (int t : principal_two_sided_ideal(S, s)) ideal.insert(t);
      std::vector<int> elems(ideal.begin(), ideal.end());
      std::cout << emit_cayley_table(rees_quotient(S, elems).semigroup);
      return 0;
    };
  });

  auto* embed = app.add_subcommand("embed", "write a faithful realization");
  embed->require_subcommand(1);
  embed->fallthrough();
  auto* wp = embed->add_subcommand(
      "wagner-preston", "each element acting on the semigroup itself");
  add_file(wp);
  wp->callback([&] {
    run = [&]() {
      auto obj = load();
      const auto& S = obj.semigroup;
      WagnerPrestonRep rep = wagner_preston(S);
      std::cout << emit_partial_bijections(
          fis_from_maps(rep.images, S.labels()));
      return 0;
    };
  });
  auto* munn = embed->add_subcommand(
      "munn", "conjugation on the idempotents; kernel is the maximum "
              "idempotent-separating congruence");
  add_file(munn);
  munn->callback([&] {
    run = [&]() {
      auto obj = load();
      std::cout << emit_partial_bijections(
          munn_representation(obj.semigroup).image);
      return 0;
    };
  });

  auto* cosets = app.add_subcommand(
      "cosets", "coset space of a closed inverse subsemigroup");
  cosets->add_option("--sub", subspec,
                     "comma-separated generators of the subsemigroup")
      ->required();
  add_file(cosets);
  cosets->callback([&] {
    run = [&]() {
      auto obj = load();
      const auto& S = obj.semigroup;
      auto H = closed_inverse_subsemigroup_generated(
          S, resolve_elements(S, subspec));
      if (!is_proper_closed_inverse_subsemigroup(S, H))
        throw InvalidInputError(
            "the generated closed inverse subsemigroup contains the zero");
      CosetSpace cs = coset_space(S, H);
      Action act = coset_action(S, H, cs);
      std::cout << "sub-order: " << H.size() << '\n' << "sub-elements:";
      for (int s : H) std::cout << ' ' << S.label(s);
      std::cout << '\n' << "cosets: " << cs.cosets.size() << '\n';
      for (size_t k = 0; k < cs.cosets.size(); ++k) {
        std::cout << "coset " << k << " (rep " << S.label(cs.reps[k]) << "):";
        for (int s : cs.cosets[k]) std::cout << ' ' << S.label(s);
        std::cout << '\n';
      }
      std::cout << "transitive: " << yn(is_transitive(S, act)) << '\n';
      return 0;
    };
  });

  auto* recog = app.add_subcommand("recognize", "structure recognition");
  recog->require_subcommand(1);
  recog->fallthrough();
  auto* rsemi = recog->add_subcommand(
      "semidirect", "semilattice-by-group semidirect product");
  add_file(rsemi);
  rsemi->callback([&] {
    run = [&]() {
      auto obj = load();
      SemidirectRecognition R = semidirect_recognition(obj.semigroup);
      std::cout << "has-zero: " << yn(R.has_zero) << '\n'
                << "by-isomorphism-search: " << yn(R.by_isomorphism_search)
                << '\n'
                << "by-unitary-cover: " << yn(R.by_unitary_cover) << '\n'
                << "by-min-group-star-bijective: "
                << yn(R.by_min_group_star_bijective) << '\n'
                << "by-some-group-star-bijective: "
                << yn(R.by_some_group_star_bijective) << '\n'
                << "by-domain-pairing: " << yn(R.by_domain_pairing) << '\n'
                << "by-range-pairing: " << yn(R.by_range_pairing) << '\n';
      if (R.witness)
        std::cout << "witness-order: " << R.witness->product.order() << '\n';
      std::cout << "recognized: " << yn(R.recognized()) << '\n';
      return R.recognized() ? 0 : 1;
    };
  });
  auto* rclif = recog->add_subcommand(
      "clifford", "semilattice of groups with restriction maps");
  add_file(rclif);
  rclif->callback([&] {
    run = [&]() {
      auto obj = load();
      const auto& S = obj.semigroup;
      bool central = is_clifford(S);
      std::cout << "central-idempotents: " << yn(central) << '\n';
      if (!central) {
        std::cout << "recognized: no\n";
        return 1;
      }
      PresheafOfGroups P = presheaf_from_clifford(S);
      std::cout << "nodes: " << P.base.size() << '\n';
      if (!are_isomorphic(S, clifford_from_presheaf(P)))
        throw InternalCheckError("presheaf round trip lost the semigroup");
      std::cout << "round-trip-isomorphic: yes\nrecognized: yes\n";
      return 0;
    };
  });
  auto* rgz = recog->add_subcommand(
      "groupoid-zero", "groupoid composition plus an absorbing zero");
  add_file(rgz);
  rgz->callback([&] {
    run = [&]() {
      auto obj = load();
      const auto& S = obj.semigroup;
      if (!S.zero()) {
        std::cout << "has-zero: no\nrecognized: no\n";
        return 1;
      }
      std::cout << "has-zero: yes\n";
      bool flat = is_groupoid_with_zero(S);
      std::cout << "order-trivial-off-zero: " << yn(flat) << '\n';
      if (!flat) {
        std::cout << "recognized: no\n";
        return 1;
      }
      std::vector<int> nonzero;
      for (int s = 0; s < S.order(); ++s)
        if (s != *S.zero()) nonzero.push_back(s);
      FiniteGroupoid G = groupoid_from_subset(S, nonzero);
      std::cout << "arrows: " << G.size << '\n';
      if (!are_isomorphic(S, adjoin_zero(G)))
        throw InternalCheckError("groupoid round trip lost the semigroup");
      std::cout << "round-trip-isomorphic: yes\nrecognized: yes\n";
      return 0;
    };
  });

  auto* congs = app.add_subcommand("congruences", "the congruence lattice");
  congs->add_flag("--all", show_all, "list every congruence's blocks");
  add_file(congs);
  congs->callback([&] {
    run = [&]() {
      auto obj = load();
      const auto& S = obj.semigroup;
      auto list = enumerate_congruences(S, caps.max_congruence_order);
      std::cout << "congruences: " << list.size() << '\n';
      if (show_all) {
        for (size_t k = 0; k < list.size(); ++k) {
          std::cout << "congruence " << k << ":";
          print_blocks(S, list[k].partition());
        }
      }
      return 0;
    };
  });

  auto* check = app.add_subcommand("check", "validate a document");
  add_file(check);
  check->callback([&] {
    run = [&]() {
      auto obj = load();
      std::cout << "ok: yes\nkind: " << kind_name(obj.kind)
                << "\norder: " << obj.semigroup.order() << '\n';
      if (obj.action)
        std::cout << "action-points: " << obj.action->num_points << '\n';
      return 0;
    };
  });

  CLI11_PARSE(app, argc, argv);

  try {
    return run ? run() : 1;
  } catch (const InvalidInputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failed: " << e.what() << '\n';
    return 4;
  }
}
