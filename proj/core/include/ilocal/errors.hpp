#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ilocal {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A complex violates bdry^2 = 0, monotonicity, gap parity or J-symmetry.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

/// An involution does not have exactly one fixed cell, or is not a valid
/// cellular involution.
class NotSplit : public InvalidComplex {
 public:
  using InvalidComplex::InvalidComplex;
};

/// 2 * delta exceeds the width of the complex being doubled or halved.
class WidthExceeded : public Error {
 public:
  using Error::Error;
};

class NotSimplified : public Error {
 public:
  using Error::Error;
};

/// The module is not of the shape produced by the tower-placement algorithm.
class NotInXForm : public Error {
 public:
  using Error::Error;
};

class NotChainMap : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ilocal
