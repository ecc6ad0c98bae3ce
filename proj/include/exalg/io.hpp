// Wire formats. Plain text: "m n" then m rows of whitespace-separated
// field-element literals. JSON: {"field", "rows", "cols", "entries"}
// with element literals as strings. Both are bit-exact: serialize then
// parse is the identity on canonical forms.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "exalg/poly.hpp"

namespace exalg {

enum class Format { plain, json };

// "q" / "Q" or "gf:<p>" / "GF(<p>)".
Field parse_field(std::string_view s);

// "num/den" or integer over Q; decimal residue (sign tolerated) over GF(p).
Scalar parse_scalar(const Field& F, std::string_view s);

// ParseError carries line/position context; for JSON input the embedded
// field must agree with F (FieldMismatch otherwise).
Matrix parse_matrix(const Field& F, std::string_view text, Format fmt);

// Several matrices from one stream (consecutive plain blocks, or a JSON
// array of matrix objects).
std::vector<Matrix> parse_matrices(const Field& F, std::string_view text, Format fmt);

std::string serialize(const Matrix& a, Format fmt = Format::plain);
std::string serialize(const Poly& p);  // "[c0, c1, ..., cn]"

}  // namespace exalg
