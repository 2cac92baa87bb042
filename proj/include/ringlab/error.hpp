#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringlab {

enum class ErrorCode {
  IndexOutOfRange,
  InvalidRing,
  OutOfCap,
  UnsupportedOrder,
  UnsupportedGroup,
  InvalidGroup,
  NotAnIdeal,
  ImproperIdeal,
  NotIdempotent,
  ZeroCorner,
  InvalidEndomorphism,
  NotAGroupRing,
  BadElementRef,
  SyntaxError,
  RangeError,
  UnknownCheck,
  Io,
};

std::string_view error_code_name(ErrorCode code);

class RingError : public std::runtime_error {
 public:
  RingError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the byte offset into the source text and the set of
/// tokens that would have been accepted there.
class SyntaxError : public RingError {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// An integer argument outside its admissible range; offset points at it.
class RangeError : public RingError {
 public:
  RangeError(std::size_t offset, const std::string& what)
      : RingError(ErrorCode::RangeError, what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ringlab
