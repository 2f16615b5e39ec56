#pragma once

#include <stdexcept>
#include <string>

namespace polydefect {

// Bad user input: malformed polytope, violated precondition, bad grammar.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Two routes that must agree did not. Always a bug in this library.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace polydefect
