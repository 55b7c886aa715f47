#ifndef ISKIT_DOCUMENT_HPP
#define ISKIT_DOCUMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "iskit/action.hpp"
#include "iskit/inverse_semigroup.hpp"
#include "iskit/partial_bijection.hpp"

namespace iskit {

// Parsed form of a textual input document, before semantic construction.
struct InputDocument {
  enum class Kind {
    partial_bijections,
    cayley_table,
    presheaf,
    semidirect,
    groupoid,
    action,
  };
  Kind kind = Kind::partial_bijections;

  // partial_bijections, action
  int num_points = 0;

  // partial_bijections
  std::vector<std::string> gen_names;
  std::vector<PartialBijection> gens;

  // cayley_table, action
  std::vector<std::string> element_labels;
  std::vector<std::vector<int>> table;

  // action: one row per element, kUndefinedPoint where the element does
  // not move the point
  std::vector<std::vector<int>> act_rows;

  // presheaf, semidirect
  std::vector<std::string> point_labels;
  std::vector<std::vector<int>> meet_table;

  // presheaf
  std::vector<std::vector<std::string>> node_labels;
  std::vector<std::vector<std::vector<int>>> node_tables;
  std::vector<std::vector<std::vector<int>>> restriction;  // [from][to]

  // semidirect
  std::vector<std::string> group_labels;
  std::vector<std::vector<int>> group_table;
  std::vector<std::vector<int>> act_table;  // [group element][point]

  // groupoid
  std::vector<std::string> arrow_labels;
  std::vector<char> arrow_identity;
  std::vector<int> arrow_dom, arrow_ran;     // -1 until declared
  std::vector<std::vector<int>> comp_table;  // -1 where not declared
};

const char* kind_name(InputDocument::Kind k);

// Line-oriented reader: '#' starts a comment, blank lines are skipped, and
// the first directive must be kind:.  Errors carry 1-based line numbers.
InputDocument parse_document(const std::string& text);

struct BuildCaps {
  int max_order = 100000;
  int max_congruence_order = 12;
  int max_carrier = 8;
};

struct BuiltObject {
  FiniteInvSemigroup semigroup;
  std::optional<Action> action;
  InputDocument::Kind kind;
};

// Runs the document through the matching construction: generators are
// closed, tables validated, presheaves glued, products formed, groupoids
// given a zero.
BuiltObject build(const InputDocument& doc, const BuildCaps& caps = {});

// Round-trippable renderings of a built semigroup.
std::string emit_cayley_table(const FiniteInvSemigroup& S);
// requires concrete maps on the semigroup
std::string emit_partial_bijections(const FiniteInvSemigroup& S);

}  // namespace iskit

#endif
