#pragma once

#include <stdexcept>
#include <string>

namespace cascor {

/// Malformed input data or an argument that violates an operation's
/// precondition (bad DIMACS, dimension mismatch, invalid config).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string &what) : std::runtime_error(what) {}
};

/// A resource or search limit was reached (retry budget, qubit limit,
/// allocator capacity).
class LimitError : public std::runtime_error {
public:
  explicit LimitError(const std::string &what) : std::runtime_error(what) {}
};

} // namespace cascor
