#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace foxcalc {

/// Error categories surfaced by every module. The numeric values are part of
/// the C API (see foxcalc.h) and must stay stable.
enum class ErrorCode : int {
  Parse = 1,
  RankMismatch = 2,
  IndexOutOfRange = 3,
  NotBoundaryFixing = 4,
  NotPureBraid = 5,
  NotMonomial = 6,
  DepthPrecondition = 7,
  NontrivialHomology = 8,
  InvalidCylinder = 9,
  Singular = 10,
  GenusMismatch = 11,
  DegeneratePresentation = 12,
  RhoInconsistent = 13,
  DivisionByZero = 14,
  Overflow = 15,
  Precondition = 16,
  Io = 17,
  InvalidArgument = 18,
  Internal = 19,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure carrying the offending character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

using Coefficient = std::int64_t;

// Checked integer arithmetic; coefficient growth past 64 bits is reported, never wrapped.
inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return r;
}

inline Coefficient checked_sub(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in subtraction");
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return r;
}

}  // namespace foxcalc
