#ifndef SPECTRAL_ERRORS_HPP
#define SPECTRAL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectral {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad order, bad part list, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a supported size (graph order above kMaxOrder, graph6 header too large).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is the byte offset of the offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), message_(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// An exact check contradicted a candidate spectrum.
class CertificationError : public Error {
 public:
  using Error::Error;
};

/// The floating-point eigensolver did not converge within its sweep budget.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectral

#endif  // SPECTRAL_ERRORS_HPP
