#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cleansr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ring specification is well-formed syntactically but does not describe a
/// valid finite commutative ring with unity (axiom failure, non-prime
/// characteristic, closure exceeding the element bound, ...).
class MalformedSpec : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a ring-spec string; carries the byte offset of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// |Id(R)| is not a power of two. Cannot happen for a valid finite commutative
/// ring, so this signals a corrupted operation table.
class NonPowerOfTwoIdempotentCount : public Error {
 public:
  using Error::Error;
};

class LabelMismatch : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

/// The ring (or graph) does not satisfy the hypotheses of the theorem whose
/// closed form was requested.
class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace cleansr
