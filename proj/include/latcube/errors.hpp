#pragma once

#include <stdexcept>
#include <string>

namespace latcube {

// Malformed text input (permutations, paratopisms, cube files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Operands of different degree or order.
class MismatchError : public std::invalid_argument {
 public:
  explicit MismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

// A value that violates a structural invariant (not a bijection, not Latin).
class InvalidValue : public std::invalid_argument {
 public:
  explicit InvalidValue(const std::string& what)
      : std::invalid_argument(what) {}
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latcube
