#pragma once

#include <stdexcept>
#include <string>

namespace extalg {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an operation's mathematical domain (m > n, rank out of
// range, division by zero, non-disjoint index words, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Incompatible shapes, ambients or grades between operands.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input (rational strings, JSON payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Computation declined because it exceeds the configured complexity ceiling.
class RefusedError : public Error {
 public:
  using Error::Error;
};

}  // namespace extalg
