#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qcoord {

/// Invalid numeric parameter (even root order, n < 1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator order or basis flavor violates a structural requirement.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Vectors of different dimension were compared or combined.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The operation is not defined for the requested algebra variant.
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Precondition of an operation does not hold for its argument.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Expression parse failure with the byte offset of the offending token and
/// the set of tokens that would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset,
             std::vector<std::string> expected = {})
      : std::runtime_error(message),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

}  // namespace qcoord
