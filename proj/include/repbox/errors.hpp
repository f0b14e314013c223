#pragma once

#include <stdexcept>
#include <string>

namespace repbox {

/// Invalid input or violated precondition. Maps to exit status 1 in the CLI.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A resource guard (vertex count, face count, search size) refused the input.
/// Maps to exit status 2 in the CLI.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// A constructive step produced an object that failed its own verification.
/// Reaching this always indicates a bug.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace repbox
