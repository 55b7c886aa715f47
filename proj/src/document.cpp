#include "iskit/document.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "iskit/constructions.hpp"
#include "iskit/errors.hpp"

namespace iskit {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InvalidInputError("line " + std::to_string(line) + ": " + msg);
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
  }
  return lines;
}

struct Directive {
  int line;
  std::vector<std::string> head;  // directive words, colon stripped
  std::vector<std::string> args;
};

// a directive line has a token ending in ':' among its first three tokens
std::optional<Directive> as_directive(const Line& l) {
  for (size_t i = 0; i < l.tokens.size() && i < 3; ++i) {
    const std::string& t = l.tokens[i];
    if (!t.empty() && t.back() == ':') {
      Directive d;
      d.line = l.number;
      for (size_t j = 0; j < i; ++j) d.head.push_back(l.tokens[j]);
      d.head.push_back(t.substr(0, t.size() - 1));
      d.args.assign(l.tokens.begin() + i + 1, l.tokens.end());
      return d;
    }
  }
  return std::nullopt;
}

bool is_head(const Directive& d, std::initializer_list<const char*> words) {
  if (d.head.size() != words.size()) return false;
  size_t i = 0;
  for (const char* w : words)
    if (d.head[i++] != w) return false;
  return true;
}

std::pair<std::string, std::string> split_point_pair(const std::string& t,
                                                     int line) {
  auto arrow = t.find("->");
  if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= t.size())
    fail(line, "expected p->q, got " + t);
  return {t.substr(0, arrow), t.substr(arrow + 2)};
}

void check_names(const std::vector<std::string>& names, int line) {
  std::set<std::string> seen;
  for (const auto& nm : names) {
    if (nm.find(':') != std::string::npos)
      fail(line, "name " + nm + " may not contain ':'");
    if (!seen.insert(nm).second) fail(line, "duplicate name " + nm);
  }
}

// `points:` takes either a single count (points named 0..n-1) or a list of
// distinct point names
std::vector<std::string> parse_carrier_points(const Directive& d) {
  if (d.args.empty()) fail(d.line, "points: needs a count or point names");
  if (d.args.size() == 1) {
    const std::string& t = d.args[0];
    size_t used = 0;
    try {
      int n = std::stoi(t, &used);
      if (used == t.size()) {
        if (n < 0) fail(d.line, "points: must not be negative");
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
        return names;
      }
    } catch (const InvalidInputError&) {
      throw;
    } catch (...) {
    }
  }
  check_names(d.args, d.line);
  return d.args;
}

class LabelIndex {
 public:
  explicit LabelIndex(const std::vector<std::string>& labels) {
    for (size_t i = 0; i < labels.size(); ++i)
      map_[labels[i]] = static_cast<int>(i);
  }
  int resolve(const std::string& l, int line) const {
    auto it = map_.find(l);
    if (it == map_.end()) fail(line, "unknown name " + l);
    return it->second;
  }

 private:
  std::map<std::string, int> map_;
};

// consumes exactly `rows` data lines of `cols` tokens each
std::vector<Line> take_rows(const std::vector<Line>& lines, size_t& pos,
                            int rows, int cols, int header_line) {
  std::vector<Line> out;
  for (int i = 0; i < rows; ++i) {
    if (pos >= lines.size() || as_directive(lines[pos]))
      fail(pos < lines.size() ? lines[pos].number : header_line,
           "expected " + std::to_string(rows) + " data rows here");
    if (static_cast<int>(lines[pos].tokens.size()) != cols)
      fail(lines[pos].number,
           "expected " + std::to_string(cols) + " entries in this row");
    out.push_back(lines[pos]);
    ++pos;
  }
  return out;
}

std::vector<std::vector<int>> resolve_rows(const std::vector<Line>& rows,
                                           const LabelIndex& idx) {
  std::vector<std::vector<int>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<int> r;
    r.reserve(row.tokens.size());
    for (const auto& t : row.tokens) r.push_back(idx.resolve(t, row.number));
    out.push_back(std::move(r));
  }
  return out;
}

void parse_partial_bijections(InputDocument& doc,
                              const std::vector<Line>& lines, size_t pos) {
  bool have_points = false;
  std::vector<std::string> point_names;
  while (pos < lines.size()) {
    auto d = as_directive(lines[pos]);
    if (!d) fail(lines[pos].number, "expected a directive");
    ++pos;
    if (is_head(*d, {"points"})) {
      if (have_points) fail(d->line, "points: given twice");
      point_names = parse_carrier_points(*d);
      doc.num_points = static_cast<int>(point_names.size());
      have_points = true;
    } else if (d->head.size() == 2 && d->head[0] == "gen") {
      if (!have_points) fail(d->line, "gen lines must follow points:");
      const std::string& name = d->head[1];
      check_names({name}, d->line);
      if (std::find(doc.gen_names.begin(), doc.gen_names.end(), name) !=
          doc.gen_names.end())
        fail(d->line, "duplicate generator name " + name);
      LabelIndex idx(point_names);
      std::vector<int> images(doc.num_points, PartialBijection::kUndefined);
      std::vector<char> hit(doc.num_points, 0);
      for (const auto& t : d->args) {
        auto [ps, qs] = split_point_pair(t, d->line);
        int p = idx.resolve(ps, d->line);
        int q = idx.resolve(qs, d->line);
        if (images[p] != PartialBijection::kUndefined)
          fail(d->line, "point " + ps + " listed twice");
        if (hit[q]) fail(d->line, "two points map to " + qs);
        images[p] = q;
        hit[q] = 1;
      }
      doc.gen_names.push_back(name);
      doc.gens.emplace_back(std::move(images));
    } else {
      fail(d->line, "unknown directive for a partial bijection document");
    }
  }
  if (!have_points) throw InvalidInputError("document is missing points:");
  if (doc.gens.empty())
    throw InvalidInputError("at least one generator required");
}

void parse_elements_and_table(InputDocument& doc,
                              const std::vector<Line>& lines, size_t& pos,
                              const Directive& d, bool& have_table) {
  if (is_head(d, {"elements"})) {
    if (!doc.element_labels.empty()) fail(d.line, "elements: given twice");
    if (d.args.empty()) fail(d.line, "elements: needs at least one label");
    check_names(d.args, d.line);
    doc.element_labels = d.args;
  } else if (is_head(d, {"table"})) {
    if (doc.element_labels.empty())
      fail(d.line, "table: must follow elements:");
    if (have_table) fail(d.line, "table: given twice");
    if (!d.args.empty()) fail(d.line, "table: starts a block; rows follow");
    int n = static_cast<int>(doc.element_labels.size());
    LabelIndex idx(doc.element_labels);
    doc.table = resolve_rows(take_rows(lines, pos, n, n, d.line), idx);
    have_table = true;
  } else {
    fail(d.line, "unknown directive " + d.head.front() +
                     " for this document kind");
  }
}

void parse_cayley(InputDocument& doc, const std::vector<Line>& lines,
                  size_t pos) {
  bool have_table = false;
  while (pos < lines.size()) {
    auto d = as_directive(lines[pos]);
    if (!d) fail(lines[pos].number, "expected a directive");
    ++pos;
    parse_elements_and_table(doc, lines, pos, *d, have_table);
  }
  if (doc.element_labels.empty())
    throw InvalidInputError("document is missing elements:");
  if (!have_table) throw InvalidInputError("document is missing table:");
}

void parse_points_and_meet(InputDocument& doc, const std::vector<Line>& lines,
                           size_t& pos, const Directive& d, bool& have_meet) {
  if (is_head(d, {"points"})) {
    if (!doc.point_labels.empty()) fail(d.line, "points: given twice");
    if (d.args.empty()) fail(d.line, "points: needs at least one label");
    check_names(d.args, d.line);
    doc.point_labels = d.args;
  } else if (is_head(d, {"meet"})) {
    if (doc.point_labels.empty()) fail(d.line, "meet: must follow points:");
    if (have_meet) fail(d.line, "meet: given twice");
    if (!d.args.empty()) fail(d.line, "meet: starts a block; rows follow");
    int n = static_cast<int>(doc.point_labels.size());
    LabelIndex idx(doc.point_labels);
    doc.meet_table = resolve_rows(take_rows(lines, pos, n, n, d.line), idx);
    have_meet = true;
  } else {
    fail(d.line, "unknown directive " + d.head.front() +
                     " for this document kind");
  }
}

void parse_presheaf(InputDocument& doc, const std::vector<Line>& lines,
                    size_t pos) {
  bool have_meet = false;
  auto sized = [&doc]() {
    size_t n = doc.point_labels.size();
    if (doc.node_labels.empty()) {
      doc.node_labels.resize(n);
      doc.node_tables.resize(n);
      doc.restriction.assign(n, std::vector<std::vector<int>>(n));
    }
  };
  while (pos < lines.size()) {
    auto d = as_directive(lines[pos]);
    if (!d) fail(lines[pos].number, "expected a directive");
    ++pos;
    if (d->head.size() == 2 && d->head[0] == "node") {
      if (doc.point_labels.empty()) fail(d->line, "node: must follow points:");
      sized();
      int p = LabelIndex(doc.point_labels).resolve(d->head[1], d->line);
      if (!doc.node_labels[p].empty())
        fail(d->line, "node " + d->head[1] + ": given twice");
      if (d->args.empty())
        fail(d->line, "node " + d->head[1] + ": needs at least one element");
      check_names(d->args, d->line);
      doc.node_labels[p] = d->args;
    } else if (d->head.size() == 2 && d->head[0] == "table") {
      if (doc.point_labels.empty())
        fail(d->line, "table: must follow points:");
      sized();
      int p = LabelIndex(doc.point_labels).resolve(d->head[1], d->line);
      if (doc.node_labels[p].empty())
        fail(d->line, "table " + d->head[1] + ": must follow node " +
                          d->head[1] + ":");
      if (!doc.node_tables[p].empty())
        fail(d->line, "table " + d->head[1] + ": given twice");
      if (!d->args.empty())
        fail(d->line, "table: starts a block; rows follow");
      int k = static_cast<int>(doc.node_labels[p].size());
      LabelIndex idx(doc.node_labels[p]);
      doc.node_tables[p] =
          resolve_rows(take_rows(lines, pos, k, k, d->line), idx);
    } else if (d->head.size() == 3 && d->head[0] == "map") {
      if (doc.point_labels.empty()) fail(d->line, "map: must follow points:");
      sized();
      LabelIndex points(doc.point_labels);
      int from = points.resolve(d->head[1], d->line);
      int to = points.resolve(d->head[2], d->line);
      if (doc.node_labels[from].empty() || doc.node_labels[to].empty())
        fail(d->line, "map: both nodes must be declared first");
      if (!doc.restriction[from][to].empty())
        fail(d->line, "map " + d->head[1] + " " + d->head[2] +
                          ": given twice");
      if (d->args.size() != doc.node_labels[from].size())
        fail(d->line, "map " + d->head[1] + " " + d->head[2] + ": expected " +
                          std::to_string(doc.node_labels[from].size()) +
                          " images");
      LabelIndex idx(doc.node_labels[to]);
      std::vector<int> images;
      for (const auto& t : d->args) images.push_back(idx.resolve(t, d->line));
      doc.restriction[from][to] = std::move(images);
    } else {
      parse_points_and_meet(doc, lines, pos, *d, have_meet);
    }
  }
  if (doc.point_labels.empty())
    throw InvalidInputError("document is missing points:");
  if (!have_meet) throw InvalidInputError("document is missing meet:");
  sized();
  for (size_t p = 0; p < doc.point_labels.size(); ++p) {
    if (doc.node_labels[p].empty())
      throw InvalidInputError("missing node " + doc.point_labels[p] + ":");
    if (doc.node_tables[p].empty())
      throw InvalidInputError("missing table " + doc.point_labels[p] + ":");
    // the restriction of a node to itself is the identity unless stated
    if (doc.restriction[p][p].empty()) {
      doc.restriction[p][p].resize(doc.node_labels[p].size());
      for (size_t i = 0; i < doc.node_labels[p].size(); ++i)
        doc.restriction[p][p][i] = static_cast<int>(i);
    }
  }
}

void parse_semidirect(InputDocument& doc, const std::vector<Line>& lines,
                      size_t pos) {
  bool have_meet = false, have_table = false;
  while (pos < lines.size()) {
    auto d = as_directive(lines[pos]);
    if (!d) fail(lines[pos].number, "expected a directive");
    ++pos;
    if (is_head(*d, {"group"})) {
      if (!doc.group_labels.empty()) fail(d->line, "group: given twice");
      if (d->args.empty()) fail(d->line, "group: needs at least one element");
      check_names(d->args, d->line);
      doc.group_labels = d->args;
      doc.act_table.assign(doc.group_labels.size(), {});
    } else if (is_head(*d, {"table"})) {
      if (doc.group_labels.empty()) fail(d->line, "table: must follow group:");
      if (have_table) fail(d->line, "table: given twice");
      if (!d->args.empty()) fail(d->line, "table: starts a block; rows follow");
      int k = static_cast<int>(doc.group_labels.size());
      LabelIndex idx(doc.group_labels);
      doc.group_table = resolve_rows(take_rows(lines, pos, k, k, d->line), idx);
      have_table = true;
    } else if (d->head.size() == 2 && d->head[0] == "act") {
      if (doc.group_labels.empty() || doc.point_labels.empty())
        fail(d->line, "act: must follow points: and group:");
      int g = LabelIndex(doc.group_labels).resolve(d->head[1], d->line);
      if (!doc.act_table[g].empty())
        fail(d->line, "act " + d->head[1] + ": given twice");
      if (d->args.size() != doc.point_labels.size())
        fail(d->line, "act " + d->head[1] + ": expected " +
                          std::to_string(doc.point_labels.size()) +
                          " image points");
      LabelIndex points(doc.point_labels);
      std::vector<int> row;
      for (const auto& t : d->args) row.push_back(points.resolve(t, d->line));
      doc.act_table[g] = std::move(row);
    } else {
      parse_points_and_meet(doc, lines, pos, *d, have_meet);
    }
  }
  if (doc.point_labels.empty())
    throw InvalidInputError("document is missing points:");
  if (!have_meet) throw InvalidInputError("document is missing meet:");
  if (doc.group_labels.empty())
    throw InvalidInputError("document is missing group:");
  if (!have_table) throw InvalidInputError("document is missing table:");
  for (size_t g = 0; g < doc.group_labels.size(); ++g)
    if (doc.act_table[g].empty())
      throw InvalidInputError("missing act " + doc.group_labels[g] + ":");
}

void parse_groupoid(InputDocument& doc, const std::vector<Line>& lines,
                    size_t pos) {
  bool have_identities = false;
  while (pos < lines.size()) {
    auto d = as_directive(lines[pos]);
    if (!d) fail(lines[pos].number, "expected a directive");
    ++pos;
    if (is_head(*d, {"arrows"})) {
      if (!doc.arrow_labels.empty()) fail(d->line, "arrows: given twice");
      if (d->args.empty()) fail(d->line, "arrows: needs at least one arrow");
      check_names(d->args, d->line);
      doc.arrow_labels = d->args;
      size_t n = doc.arrow_labels.size();
      doc.arrow_identity.assign(n, 0);
      doc.arrow_dom.assign(n, -1);
      doc.arrow_ran.assign(n, -1);
      doc.comp_table.assign(n, std::vector<int>(n, -1));
    } else if (is_head(*d, {"identities"})) {
      if (doc.arrow_labels.empty())
        fail(d->line, "identities: must follow arrows:");
      if (have_identities) fail(d->line, "identities: given twice");
      LabelIndex idx(doc.arrow_labels);
      for (const auto& t : d->args) {
        int e = idx.resolve(t, d->line);
        doc.arrow_identity[e] = 1;
        doc.arrow_dom[e] = e;
        doc.arrow_ran[e] = e;
      }
      have_identities = true;
    } else if (d->head.size() == 2 && d->head[0] == "arrow") {
      if (doc.arrow_labels.empty())
        fail(d->line, "arrow: must follow arrows:");
      LabelIndex idx(doc.arrow_labels);
      int x = idx.resolve(d->head[1], d->line);
      if (d->args.size() != 2)
        fail(d->line, "arrow " + d->head[1] + ": takes endpoints dom ran");
      int dm = idx.resolve(d->args[0], d->line);
      int rn = idx.resolve(d->args[1], d->line);
      if (doc.arrow_dom[x] != -1 &&
          (doc.arrow_dom[x] != dm || doc.arrow_ran[x] != rn))
        fail(d->line, "arrow " + d->head[1] + ": endpoints declared twice");
      doc.arrow_dom[x] = dm;
      doc.arrow_ran[x] = rn;
    } else if (d->head.size() == 3 && d->head[0] == "comp") {
      if (doc.arrow_labels.empty())
        fail(d->line, "comp: must follow arrows:");
      LabelIndex idx(doc.arrow_labels);
      int x = idx.resolve(d->head[1], d->line);
      int y = idx.resolve(d->head[2], d->line);
      if (d->args.size() != 1)
        fail(d->line, "comp takes exactly one composite arrow");
      int z = idx.resolve(d->args[0], d->line);
      if (doc.comp_table[x][y] != -1)
        fail(d->line, "comp " + d->head[1] + " " + d->head[2] +
                          ": given twice");
      doc.comp_table[x][y] = z;
    } else {
      fail(d->line, "unknown directive for a groupoid document");
    }
  }
  if (doc.arrow_labels.empty())
    throw InvalidInputError("document is missing arrows:");
  if (!have_identities)
    throw InvalidInputError("document is missing identities:");
  for (size_t x = 0; x < doc.arrow_labels.size(); ++x)
    if (doc.arrow_dom[x] == -1)
      throw InvalidInputError("arrow " + doc.arrow_labels[x] +
                              " has no endpoints");
}

void parse_action(InputDocument& doc, const std::vector<Line>& lines,
                  size_t pos) {
  bool have_table = false, have_points = false;
  std::vector<std::string> point_names;
  std::vector<char> row_given;
  while (pos < lines.size()) {
    auto d = as_directive(lines[pos]);
    if (!d) fail(lines[pos].number, "expected a directive");
    ++pos;
    if (is_head(*d, {"points"})) {
      if (have_points) fail(d->line, "points: given twice");
      point_names = parse_carrier_points(*d);
      doc.num_points = static_cast<int>(point_names.size());
      have_points = true;
    } else if (d->head.size() == 2 && d->head[0] == "act") {
      if (doc.element_labels.empty() || !have_points)
        fail(d->line, "act: must follow elements: and points:");
      if (row_given.empty()) row_given.assign(doc.element_labels.size(), 0);
      int s = LabelIndex(doc.element_labels).resolve(d->head[1], d->line);
      if (row_given[s]) fail(d->line, "act " + d->head[1] + ": given twice");
      row_given[s] = 1;
      if (doc.act_rows.empty())
        doc.act_rows.assign(doc.element_labels.size(),
                            std::vector<int>(doc.num_points,
                                             Action::kUndefinedPoint));
      LabelIndex idx(point_names);
      for (const auto& t : d->args) {
        auto [ps, qs] = split_point_pair(t, d->line);
        int p = idx.resolve(ps, d->line);
        int q = idx.resolve(qs, d->line);
        if (doc.act_rows[s][p] != Action::kUndefinedPoint)
          fail(d->line, "point " + ps + " listed twice");
        doc.act_rows[s][p] = q;
      }
    } else {
      parse_elements_and_table(doc, lines, pos, *d, have_table);
    }
  }
  if (doc.element_labels.empty())
    throw InvalidInputError("document is missing elements:");
  if (!have_table) throw InvalidInputError("document is missing table:");
  if (!have_points) throw InvalidInputError("document is missing points:");
  if (doc.act_rows.empty())
    doc.act_rows.assign(doc.element_labels.size(),
                        std::vector<int>(doc.num_points,
                                         Action::kUndefinedPoint));
}

void sanitize_labels(std::vector<std::string>& labels) {
  std::set<std::string> seen;
  for (auto& l : labels) {
    for (char& c : l)
      if (c == ':' || c == '#' || c == ' ' || c == '\t') c = '_';
    if (l.empty()) l = "_";
    while (!seen.insert(l).second) l += "_";
  }
}

}  // namespace

const char* kind_name(InputDocument::Kind k) {
  switch (k) {
    case InputDocument::Kind::partial_bijections:
      return "partial_bijections";
    case InputDocument::Kind::cayley_table:
      return "cayley_table";
    case InputDocument::Kind::presheaf:
      return "presheaf";
    case InputDocument::Kind::semidirect:
      return "semidirect";
    case InputDocument::Kind::groupoid:
      return "groupoid";
    case InputDocument::Kind::action:
      return "action";
  }
  return "unknown";
}

InputDocument parse_document(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw InvalidInputError("empty document");
  auto first = as_directive(lines[0]);
  if (!first || !is_head(*first, {"kind"}))
    fail(lines[0].number, "the first directive must be kind:");
  if (first->args.size() != 1) fail(first->line, "kind: takes one value");
  InputDocument doc;
  const std::string& kname = first->args[0];
  using K = InputDocument::Kind;
  if (kname == "partial_bijections") doc.kind = K::partial_bijections;
  else if (kname == "cayley_table") doc.kind = K::cayley_table;
  else if (kname == "presheaf") doc.kind = K::presheaf;
  else if (kname == "semidirect") doc.kind = K::semidirect;
  else if (kname == "groupoid") doc.kind = K::groupoid;
  else if (kname == "action") doc.kind = K::action;
  else fail(first->line, "unknown kind " + kname);

  size_t pos = 1;
  switch (doc.kind) {
    case K::partial_bijections:
      parse_partial_bijections(doc, lines, pos);
      break;
    case K::cayley_table:
      parse_cayley(doc, lines, pos);
      break;
    case K::presheaf:
      parse_presheaf(doc, lines, pos);
      break;
    case K::semidirect:
      parse_semidirect(doc, lines, pos);
      break;
    case K::groupoid:
      parse_groupoid(doc, lines, pos);
      break;
    case K::action:
      parse_action(doc, lines, pos);
      break;
  }
  return doc;
}

BuiltObject build(const InputDocument& doc, const BuildCaps& caps) {
  using K = InputDocument::Kind;
  switch (doc.kind) {
    case K::partial_bijections: {
      ClosureOptions opts;
      opts.max_carrier = caps.max_carrier;
      opts.max_elements = caps.max_order;
      opts.names = doc.gen_names;
      return {close_generators(doc.gens, opts), std::nullopt, doc.kind};
    }
    case K::cayley_table: {
      if (static_cast<int>(doc.element_labels.size()) > caps.max_order)
        throw CapExceededError("table order exceeds the cap of " +
                               std::to_string(caps.max_order));
      return {from_cayley_table(doc.table, doc.element_labels), std::nullopt,
              doc.kind};
    }
    case K::presheaf: {
      SemilatticePoset base =
          make_semilattice(doc.meet_table, doc.point_labels);
      std::vector<FiniteInvSemigroup> groups;
      groups.reserve(doc.node_labels.size());
      for (size_t p = 0; p < doc.node_labels.size(); ++p)
        groups.push_back(
            from_cayley_table(doc.node_tables[p], doc.node_labels[p]));
      auto restriction = doc.restriction;
      int n = base.size();
      for (int e = 0; e < n; ++e)
        for (int f = 0; f < n; ++f) {
          if (e == f || !base.leq(f, e)) continue;
          if (restriction[e][f].empty())
            throw InvalidInputError("missing map " + base.label(e) + " " +
                                    base.label(f) + ":");
        }
      PresheafOfGroups P = make_presheaf(std::move(base), std::move(groups),
                                         std::move(restriction));
      return {clifford_from_presheaf(P), std::nullopt, doc.kind};
    }
    case K::semidirect: {
      SemilatticePoset lat = make_semilattice(doc.meet_table, doc.point_labels);
      FiniteInvSemigroup G =
          from_cayley_table(doc.group_table, doc.group_labels);
      SemilatticeGroupAction A = make_semilattice_group_action(
          std::move(G), std::move(lat), doc.act_table);
      return {semidirect_product(A), std::nullopt, doc.kind};
    }
    case K::groupoid: {
      int n = static_cast<int>(doc.arrow_labels.size());
      auto comp = doc.comp_table;
      // identity laws pin down composites with endpoint identities
      auto set_comp = [&](int x, int y, int z) {
        if (comp[x][y] != -1 && comp[x][y] != z)
          throw InvalidInputError("composite " + doc.arrow_labels[x] + " * " +
                                  doc.arrow_labels[y] +
                                  " conflicts with the identity laws");
        comp[x][y] = z;
      };
      for (int x = 0; x < n; ++x) {
        set_comp(x, doc.arrow_dom[x], x);
        set_comp(doc.arrow_ran[x], x, x);
      }
      std::vector<int> inv(n, -1);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (comp[x][y] == doc.arrow_ran[x] && comp[y][x] == doc.arrow_dom[x]) {
            if (inv[x] != -1 && inv[x] != y)
              throw InvalidInputError("arrows " + doc.arrow_labels[inv[x]] +
                                      " and " + doc.arrow_labels[y] +
                                      " both invert " + doc.arrow_labels[x]);
            inv[x] = y;
          }
        }
        if (inv[x] == -1)
          throw InvalidInputError("no inverse declared for arrow " +
                                  doc.arrow_labels[x]);
      }
      std::vector<int> flat;
      flat.reserve(static_cast<size_t>(n) * n);
      for (const auto& row : comp) flat.insert(flat.end(), row.begin(), row.end());
      FiniteGroupoid G =
          make_groupoid(n, doc.arrow_identity, doc.arrow_dom, doc.arrow_ran,
                        std::move(inv), std::move(flat), doc.arrow_labels);
      return {adjoin_zero(G), std::nullopt, doc.kind};
    }
    case K::action: {
      FiniteInvSemigroup S = from_cayley_table(doc.table, doc.element_labels);
      Action A = make_action(S, doc.act_rows);
      return {std::move(S), std::move(A), doc.kind};
    }
  }
  throw InternalCheckError("unhandled document kind");
}

std::string emit_cayley_table(const FiniteInvSemigroup& S) {
  std::vector<std::string> labels = S.labels();
  sanitize_labels(labels);
  std::ostringstream out;
  out << "kind: cayley_table\nelements:";
  for (const auto& l : labels) out << ' ' << l;
  out << "\ntable:\n";
  for (int i = 0; i < S.order(); ++i) {
    for (int j = 0; j < S.order(); ++j) {
      if (j) out << ' ';
      out << labels[S.product(i, j)];
    }
    out << '\n';
  }
  return out.str();
}

std::string emit_partial_bijections(const FiniteInvSemigroup& S) {
  if (!S.has_maps())
    throw InvalidInputError(
        "the semigroup carries no concrete partial bijections to write");
  std::vector<std::string> labels = S.labels();
  sanitize_labels(labels);
  int n = S.maps().front().carrier_size();
  std::ostringstream out;
  out << "kind: partial_bijections\npoints: " << n << '\n';
  for (int i = 0; i < S.order(); ++i) {
    out << "gen " << labels[i] << ':';
    const PartialBijection& f = S.maps()[i];
    for (int x = 0; x < n; ++x)
      if (f.defined_at(x)) out << ' ' << x << "->" << f.apply(x);
    out << '\n';
  }
  return out.str();
}

}  // namespace iskit
