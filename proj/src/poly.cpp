#include "exalg/poly.hpp"

namespace exalg {

namespace {

void check_same_field(const Poly& p, const Poly& q) {
  if (!(p.field() == q.field()))
    fail(Errc::FieldMismatch, p.field().name() + " vs " + q.field().name());
}

}  // namespace

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::from_coeffs(const Field& F, std::vector<Scalar> ascending) {
  for (const auto& c : ascending)
    if (!(c.field() == F)) fail(Errc::FieldMismatch, "coefficient over " + c.field().name());
  Poly p(F);
  p.coeffs_ = std::move(ascending);
  p.normalize();
  return p;
}

Poly Poly::constant(const Scalar& a) { return from_coeffs(a.field(), {a}); }

Poly Poly::x(const Field& F) { return from_coeffs(F, {F.zero(), F.one()}); }

Scalar Poly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : field_.zero();
}

Poly operator+(const Poly& p, const Poly& q) {
  check_same_field(p, q);
  std::size_t n = std::max(p.coeffs_.size(), q.coeffs_.size());
  std::vector<Scalar> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(p.coeff(i) + q.coeff(i));
  return Poly::from_coeffs(p.field_, std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) {
  check_same_field(p, q);
  std::size_t n = std::max(p.coeffs_.size(), q.coeffs_.size());
  std::vector<Scalar> c;
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) c.push_back(p.coeff(i) - q.coeff(i));
  return Poly::from_coeffs(p.field_, std::move(c));
}

Poly operator*(const Poly& p, const Poly& q) {
  check_same_field(p, q);
  if (p.is_zero() || q.is_zero()) return Poly(p.field_);
  std::vector<Scalar> c(p.coeffs_.size() + q.coeffs_.size() - 1, p.field_.zero());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + p.coeffs_[i] * q.coeffs_[j];
  return Poly::from_coeffs(p.field_, std::move(c));
}

bool operator==(const Poly& p, const Poly& q) {
  if (!(p.field_ == q.field_) || p.coeffs_.size() != q.coeffs_.size()) return false;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    if (p.coeffs_[i] != q.coeffs_[i]) return false;
  return true;
}

Scalar Poly::eval(const Scalar& v) const {
  Scalar r = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * v + coeffs_[i];
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& p, const Poly& g) {
  check_same_field(p, g);
  if (g.is_zero()) fail(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const Field& F = p.field();
  std::vector<Scalar> rem(p.coeffs());
  std::size_t dg = static_cast<std::size_t>(g.degree());
  if (rem.size() < dg + 1) return {Poly(F), p};
  Scalar lead_inv = g.coeff(dg).inv();
  std::vector<Scalar> quot(rem.size() - dg, F.zero());
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (rem[i].is_zero()) continue;
    Scalar q = rem[i] * lead_inv;
    quot[i - dg] = q;
    for (std::size_t j = 0; j <= dg; ++j)
      rem[i - dg + j] = rem[i - dg + j] - q * g.coeff(j);
  }
  return {Poly::from_coeffs(F, std::move(quot)), Poly::from_coeffs(F, std::move(rem))};
}

Matrix eval_matrix(const Poly& p, const Matrix& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "eval_matrix on a non-square matrix");
  if (!(p.field() == a.field()))
    fail(Errc::FieldMismatch, p.field().name() + " vs " + a.field().name());
  std::size_t n = a.rows();
  Matrix r = Matrix::zero(a.field(), n, n);
  const auto& c = p.coeffs();
  Matrix id = Matrix::identity(a.field(), n);
  for (std::size_t i = c.size(); i-- > 0;) r = r * a + c[i] * id;
  return r;
}

}  // namespace exalg
