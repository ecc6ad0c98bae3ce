#include "exalg/error.hpp"

namespace exalg {

const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ZeroDimension: return "ZeroDimension";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::BadCut: return "BadCut";
    case Errc::BadIndex: return "BadIndex";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::NotTriangular: return "NotTriangular";
    case Errc::SingularDiagonal: return "SingularDiagonal";
    case Errc::Singular: return "Singular";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotIndependent: return "NotIndependent";
    case Errc::NotTotal: return "NotTotal";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace exalg
