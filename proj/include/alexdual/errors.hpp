#pragma once

#include <stdexcept>
#include <string>

namespace alexdual {

// Malformed .scx / .pos input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on the mathematical input was violated (unknown vertex,
// not a subcomplex, not a reduced lattice, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation with a hard size cap (64-vertex grounds, 14-vertex
// isomorphism search) was asked to exceed it.
struct SizeLimitError : std::runtime_error {
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace alexdual
