#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace goeritz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter index outside the alphabet, an unknown token, or a bad exponent.
/// When the word came from text, `offset()` is the byte offset of the token.
class MalformedWord : public Error {
 public:
  explicit MalformedWord(const std::string& what, std::size_t offset = npos)
      : Error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t offset_;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// Operands built over different models (genus, number of holes).
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

/// An internal certificate failed; indicates a bug rather than bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class InvalidSchedule : public Error {
 public:
  InvalidSchedule(const std::string& what, std::size_t prefix)
      : Error(what), prefix_(prefix) {}
  /// Length of the first prefix that violates the schedule invariants.
  std::size_t prefix() const { return prefix_; }

 private:
  std::size_t prefix_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The surface word is not null-homotopic in the handlebody, so no isotopy
/// of the arc can have it as terminal arc.
class NotRealizable : public Error {
 public:
  using Error::Error;
};

class NearSingular : public Error {
 public:
  using Error::Error;
};

}  // namespace goeritz
