#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cwsphere {

enum class ErrorKind {
  ParseError,
  InvalidGeometry,
  GroundSetTooLarge,
  ResourceLimit,
  NotComparable,
  No0Hat,
  No1Hat,
  NotALattice,
  NotGraded,
  FaceNotInComplex,
  VertexCollision,
  ChainNotInL,
  ChainMustEndAtTop,
  NotProperElement,
  NotAMultichain,
  NotExtremal,
  ZeroPolynomial,
  Overflow,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Counting arithmetic. Every count in this library is exact; overflow is an error, never a wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit addition overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "64-bit multiplication overflow");
  return r;
}

}  // namespace cwsphere
