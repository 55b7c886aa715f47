#include "iskit/inverse_semigroup.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "iskit/errors.hpp"

namespace iskit {

namespace {

std::string elt(const std::vector<std::string>& labels, int i) {
  if (i >= 0 && i < static_cast<int>(labels.size()) && !labels[i].empty())
    return labels[i];
  return "#" + std::to_string(i);
}

void check_associativity(const std::vector<std::vector<int>>& t,
                         const std::vector<std::string>& labels,
                         const ValidationOptions& opts) {
  int m = static_cast<int>(t.size());
  auto fail = [&](int a, int b, int c) {
    throw InvalidInputError("table is not associative: (" + elt(labels, a) +
                            " " + elt(labels, b) + ") " + elt(labels, c) +
                            " != " + elt(labels, a) + " (" + elt(labels, b) +
                            " " + elt(labels, c) + ")");
  };
  if (m <= opts.exhaustive_limit) {
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) fail(a, b, c);
    return;
  }
  uint64_t x = opts.sample_seed;
  auto next = [&x, m]() {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((x >> 33) % static_cast<uint64_t>(m));
  };
  for (int i = 0; i < opts.sample_count; ++i) {
    int a = next(), b = next(), c = next();
    if (t[t[a][b]][c] != t[a][t[b][c]]) fail(a, b, c);
  }
}

}  // namespace

FiniteInvSemigroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                     std::vector<std::string> labels,
                                     std::vector<PartialBijection> maps,
                                     const ValidationOptions& opts) {
  int m = static_cast<int>(table.size());
  if (m == 0) throw InvalidInputError("empty multiplication table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m)
      throw InvalidInputError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= m)
        throw InvalidInputError("table entry out of range");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != m)
    throw InvalidInputError("label count does not match table size");
  if (!maps.empty() && static_cast<int>(maps.size()) != m)
    throw InvalidInputError("map count does not match table size");

  check_associativity(table, labels, opts);

  FiniteInvSemigroup S;
  S.m_ = m;
  S.product_.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      S.product_[static_cast<size_t>(a) * m + b] = table[a][b];

  // unique inverse scan; non-uniqueness is reported via the idempotents
  // that fail to commute, which must exist in that case
  S.inverse_.assign(m, -1);
  bool unique = true;
  for (int a = 0; a < m && unique; ++a) {
    int found = -1;
    for (int b = 0; b < m; ++b) {
      if (table[table[a][b]][a] == a && table[table[b][a]][b] == b) {
        if (found == -1) {
          found = b;
        } else {
          unique = false;
          break;
        }
      }
    }
    if (found == -1)
      throw InvalidInputError("not regular: element " + elt(labels, a) +
                              " has no inverse");
    S.inverse_[a] = found;
  }

  S.idempotent_.assign(m, 0);
  for (int e = 0; e < m; ++e)
    if (table[e][e] == e) {
      S.idempotent_[e] = 1;
      S.idempotents_.push_back(e);
    }
  for (int e : S.idempotents_)
    for (int f : S.idempotents_)
      if (table[e][f] != table[f][e])
        throw InvalidInputError("idempotents do not commute: " +
                                elt(labels, e) + " and " + elt(labels, f));
  if (!unique)
    throw InternalCheckError(
        "inverses not unique although idempotents commute");

  S.d_.resize(m);
  S.r_.resize(m);
  for (int a = 0; a < m; ++a) {
    S.d_[a] = table[S.inverse_[a]][a];
    S.r_[a] = table[a][S.inverse_[a]];
  }

  for (int z = 0; z < m; ++z) {
    bool is_zero = true;
    for (int a = 0; a < m && is_zero; ++a)
      is_zero = table[z][a] == z && table[a][z] == z;
    if (is_zero) {
      S.zero_ = z;
      break;
    }
  }
  for (int e = 0; e < m; ++e) {
    bool is_id = true;
    for (int a = 0; a < m && is_id; ++a)
      is_id = table[e][a] == a && table[a][e] == a;
    if (is_id) {
      S.identity_ = e;
      break;
    }
  }

  // natural partial order, via its four characterizations:
  //   s = ts⁻¹s,  s = te (e idempotent),  s = ft (f idempotent),  s = ss⁻¹t
  Relation leq(m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      bool f1 = table[t][S.d_[s]] == s;
      bool f4 = table[S.r_[s]][t] == s;
      bool f2 = false, f3 = false;
      for (int e : S.idempotents_) {
        if (table[t][e] == s) f2 = true;
        if (table[e][t] == s) f3 = true;
        if (f2 && f3) break;
      }
      if (f1 != f2 || f1 != f3 || f1 != f4)
        throw InternalCheckError(
            "natural order characterizations disagree at (" + elt(labels, s) +
            ", " + elt(labels, t) + "): corrupted table");
      if (f1) leq.set(s, t);
    }
  S.leq_ = std::move(leq);

  if (labels.empty())
    for (int i = 0; i < m; ++i) labels.push_back("x" + std::to_string(i));
  S.labels_ = std::move(labels);
  S.maps_ = std::move(maps);
  return S;
}

namespace {

std::vector<std::string> default_names(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) {
    if (i < 26)
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      names.push_back("g" + std::to_string(i));
  }
  return names;
}

}  // namespace

FiniteInvSemigroup close_generators(const std::vector<PartialBijection>& gens,
                                    const ClosureOptions& opts) {
  if (gens.empty()) throw InvalidInputError("no generators given");
  int n = gens.front().carrier_size();
  if (n > opts.max_carrier)
    throw CapExceededError("carrier size " + std::to_string(n) +
                           " exceeds cap " + std::to_string(opts.max_carrier));
  for (const auto& g : gens)
    if (g.carrier_size() != n)
      throw InvalidInputError("generators act on different carriers");

  std::vector<std::string> names = opts.names;
  if (names.empty()) names = default_names(static_cast<int>(gens.size()));
  if (names.size() != gens.size())
    throw InvalidInputError("generator name count mismatch");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw InvalidInputError("duplicate generator name: " + names[i]);

  bool single_char = true;
  for (const auto& nm : names) single_char = single_char && nm.size() == 1;
  std::string sep = single_char ? "" : "*";

  // augment with inverses of generators not already present
  std::vector<PartialBijection> alphabet;
  std::vector<std::string> alphabet_names;
  auto add = [&](const PartialBijection& f, const std::string& nm) {
    for (const auto& g : alphabet)
      if (g == f) return;
    alphabet.push_back(f);
    alphabet_names.push_back(nm);
  };
  for (size_t i = 0; i < gens.size(); ++i) add(gens[i], names[i]);
  for (size_t i = 0; i < gens.size(); ++i)
    add(invert(gens[i]), names[i] + "'");

  std::unordered_map<PartialBijection, int> index;
  std::vector<PartialBijection> elements;
  std::vector<std::string> words;
  std::queue<int> frontier;

  auto discover = [&](const PartialBijection& f,
                      const std::string& word) -> bool {
    if (index.count(f)) return false;
    if (static_cast<int>(elements.size()) >= opts.max_elements)
      throw CapExceededError("closure exceeds element cap " +
                             std::to_string(opts.max_elements));
    int id = static_cast<int>(elements.size());
    index.emplace(f, id);
    elements.push_back(f);
    words.push_back(word);
    frontier.push(id);
    return true;
  };

  for (size_t i = 0; i < alphabet.size(); ++i)
    discover(alphabet[i], alphabet_names[i]);
  while (!frontier.empty()) {
    int id = frontier.front();
    frontier.pop();
    for (size_t i = 0; i < alphabet.size(); ++i) {
      // right factor acts first, so the word for w·g is w followed by g
      PartialBijection prod = compose(elements[id], alphabet[i]);
      discover(prod, words[id] + sep + alphabet_names[i]);
    }
  }

  int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a][b] = index.at(compose(elements[a], elements[b]));
  return from_cayley_table(table, words, elements, opts.validation);
}

FiniteInvSemigroup fis_from_maps(const std::vector<PartialBijection>& maps,
                                 std::vector<std::string> labels,
                                 const ValidationOptions& opts) {
  int m = static_cast<int>(maps.size());
  if (m == 0) throw InvalidInputError("no maps given");
  std::unordered_map<PartialBijection, int> index;
  for (int i = 0; i < m; ++i) {
    if (maps[i].carrier_size() != maps[0].carrier_size())
      throw InvalidInputError("maps act on different carriers");
    if (!index.emplace(maps[i], i).second)
      throw InvalidInputError("duplicate map in list");
  }
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    auto inv = index.find(invert(maps[a]));
    if (inv == index.end())
      throw InvalidInputError("map list not closed under inversion");
    for (int b = 0; b < m; ++b) {
      auto it = index.find(compose(maps[a], maps[b]));
      if (it == index.end())
        throw InvalidInputError("map list not closed under composition");
      table[a][b] = it->second;
    }
  }
  if (labels.empty()) {
    for (const auto& f : maps) {
      std::string code = "p";
      for (int v : f.images())
        code += v == PartialBijection::kUndefined
                    ? std::string("u")
                    : std::to_string(v);
      labels.push_back(code);
    }
  }
  return from_cayley_table(table, std::move(labels), maps, opts);
}

Relation natural_order(const FiniteInvSemigroup& S) {
  Relation r(S.order());
  for (int s = 0; s < S.order(); ++s)
    for (int t = 0; t < S.order(); ++t)
      if (S.leq(s, t)) r.set(s, t);
  return r;
}

Relation compatibility(const FiniteInvSemigroup& S) {
  int m = S.order();
  Relation r(m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (S.is_idempotent(S.product(S.inverse(s), t)) &&
          S.is_idempotent(S.product(s, S.inverse(t))))
        r.set(s, t);
  return r;
}

Relation orthogonality(const FiniteInvSemigroup& S) {
  if (!S.zero())
    throw InvalidInputError("orthogonality requires a zero element");
  int z = *S.zero();
  int m = S.order();
  Relation r(m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      if (S.product(S.inverse(s), t) == z && S.product(s, S.inverse(t)) == z)
        r.set(s, t);
  return r;
}

std::optional<int> meet_elements(const FiniteInvSemigroup& S, int s, int t) {
  std::vector<int> lower;
  for (int u = 0; u < S.order(); ++u)
    if (S.leq(u, s) && S.leq(u, t)) lower.push_back(u);
  for (int u : lower) {
    bool greatest = true;
    for (int v : lower)
      if (!S.leq(v, u)) { greatest = false; break; }
    if (greatest) {
      // compatible pairs meet at st⁻¹t, with d(s∧t) = d(s)d(t)
      if (S.is_idempotent(S.product(S.inverse(s), t)) &&
          S.is_idempotent(S.product(s, S.inverse(t)))) {
        int z = S.product(s, S.product(S.inverse(t), t));
        if (z != u || S.d(u) != S.product(S.d(s), S.d(t)))
          throw InternalCheckError("meet of compatible pair is not st⁻¹t");
      }
      return u;
    }
  }
  return std::nullopt;
}

std::optional<int> restricted_product(const FiniteInvSemigroup& S, int s,
                                      int t) {
  if (S.d(s) != S.r(t)) return std::nullopt;
  return S.product(s, t);
}

std::pair<int, int> restricted_factorization(const FiniteInvSemigroup& S,
                                             int s, int t) {
  int e = S.product(S.d(s), S.r(t));
  int sp = S.product(s, e);
  int tp = S.product(e, t);
  if (S.d(sp) != e || S.r(tp) != e || !S.leq(sp, s) || !S.leq(tp, t) ||
      S.product(sp, tp) != S.product(s, t))
    throw InternalCheckError("restricted factorization postcondition failed");
  return {sp, tp};
}

std::vector<int> upward_closure(const FiniteInvSemigroup& S,
                                const std::vector<int>& subset) {
  std::vector<char> in(S.order(), 0);
  for (int s : subset)
    for (int t = 0; t < S.order(); ++t)
      if (S.leq(s, t)) in[t] = 1;
  std::vector<int> out;
  for (int t = 0; t < S.order(); ++t)
    if (in[t]) out.push_back(t);
  return out;
}

std::vector<int> downward_closure(const FiniteInvSemigroup& S,
                                  const std::vector<int>& subset) {
  std::vector<char> in(S.order(), 0);
  for (int s : subset)
    for (int t = 0; t < S.order(); ++t)
      if (S.leq(t, s)) in[t] = 1;
  std::vector<int> out;
  for (int t = 0; t < S.order(); ++t)
    if (in[t]) out.push_back(t);
  return out;
}

std::vector<int> inverse_subsemigroup_generated(const FiniteInvSemigroup& S,
                                                const std::vector<int>& gens) {
  std::vector<char> in(S.order(), 0);
  std::queue<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push(x);
    }
  };
  for (int g : gens) push(g);
  while (!work.empty()) {
    int x = work.front();
    work.pop();
    push(S.inverse(x));
    for (int y = 0; y < S.order(); ++y)
      if (in[y]) {
        push(S.product(x, y));
        push(S.product(y, x));
      }
  }
  std::vector<int> out;
  for (int t = 0; t < S.order(); ++t)
    if (in[t]) out.push_back(t);
  return out;
}

}  // namespace iskit
