// Error codes and the exception type shared by every module.
#pragma once

#include <stdexcept>
#include <string>

namespace exalg {

enum class Errc {
  DivisionByZero,
  DivisionByZeroPoly,
  FieldMismatch,
  NotPrime,
  ZeroDimension,
  DimensionMismatch,
  NotSquare,
  BadCut,
  BadIndex,
  CharacteristicTooSmall,
  NotTriangular,
  SingularDiagonal,
  Singular,
  TooLarge,
  NotIndependent,
  NotTotal,
  ParseError,
};

const char* errc_name(Errc c) noexcept;

// what() is "<Name>: <detail>" so callers see the violated precondition
// by name.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

}  // namespace exalg
