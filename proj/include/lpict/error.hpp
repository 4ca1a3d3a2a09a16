#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpict {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a process term, formula, model file or trace file.
// `position` is a 0-based character offset for single-line inputs and a
// 1-based line number for line-oriented files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A configured search or enumeration bound was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Input is outside the fragment or domain an operation supports.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  enum class Kind {
    DuplicateId,
    DanglingId,
    Unreachable,
    EmptyEvents,
    DuplicateEvent,
    UnresolvedAtom,
    LeafMismatch,
    BranchingPath,
    UnknownState,
    MissingEnvironment,
    InvalidEnvironment,
  };

  ValidationError(Kind kind, const std::string& what)
      : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace lpict
