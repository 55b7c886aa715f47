#ifndef ISKIT_ANALYZE_HPP
#define ISKIT_ANALYZE_HPP

#include <string>

#include "iskit/document.hpp"

namespace iskit {

// Deterministic key: value report; the same input yields byte-identical
// output.  Predicates that need a zero read "n/a" when there is none.
std::string analyze_report(const BuiltObject& obj, const BuildCaps& caps = {});

}  // namespace iskit

#endif
