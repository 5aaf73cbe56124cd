#pragma once

#include <stdexcept>
#include <string>

namespace moricert {

// Malformed or self-inconsistent input data (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally valid input outside an operation's contract, e.g. a
// non-hyperbolic lattice handed to the cone certifier (CLI exit code 3).
class UnsupportedError : public std::runtime_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace moricert
