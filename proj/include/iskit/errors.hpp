#ifndef ISKIT_ERRORS_HPP
#define ISKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace iskit {

// Malformed data: bad tables, schema violations, unmet preconditions.
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured resource cap was hit before the computation finished.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

// A cross-check between two independently computed results failed.
// Reaching this indicates corrupted data or a bug, never user error.
class InternalCheckError : public std::logic_error {
 public:
  explicit InternalCheckError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace iskit

#endif
