// Univariate polynomials over an exact field, ascending coefficient
// order (coeffs[i] is the coefficient of x^i). The zero polynomial is
// the empty list; no trailing zero coefficients otherwise.
#pragma once

#include <utility>
#include <vector>

#include "exalg/matrix.hpp"

namespace exalg {

class Poly {
 public:
  explicit Poly(const Field& F) : field_(F) {}  // zero polynomial
  static Poly from_coeffs(const Field& F, std::vector<Scalar> ascending);
  static Poly constant(const Scalar& a);
  static Poly x(const Field& F);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial (treated as smaller than every degree).
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  // Total: 0 beyond the degree.
  Scalar coeff(std::size_t i) const;
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q);
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  Scalar eval(const Scalar& v) const;

 private:
  void normalize();
  Field field_;
  std::vector<Scalar> coeffs_;
};

// p = q*g + r with deg r < deg g, exact; DivisionByZeroPoly when g = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& g);

// p(A) by Horner's scheme on matrices (A^0 = I); NotSquare, FieldMismatch.
Matrix eval_matrix(const Poly& p, const Matrix& a);

}  // namespace exalg
