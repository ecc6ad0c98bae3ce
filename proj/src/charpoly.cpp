#include "exalg/charpoly.hpp"

#include <future>
#include <string>

namespace exalg {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square())
    fail(Errc::NotSquare, std::string(op) + " on a " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " matrix");
}

// Csanky divides by 1..n, so the characteristic must be 0 or > n.
void require_characteristic(const Matrix& a) {
  std::uint64_t ch = a.field().characteristic();
  if (ch != 0 && ch <= a.rows())
    fail(Errc::CharacteristicTooSmall,
         "characteristic " + std::to_string(ch) + " <= n = " + std::to_string(a.rows()));
}

CharPoly make_charpoly(Poly p, std::size_t n, Provenance prov) {
  if (p.degree() != static_cast<int>(n) || !p.is_monic())
    throw std::logic_error("characteristic polynomial is not monic of degree n");
  return CharPoly{std::move(p), n, prov};
}

// tr(A^1) .. tr(A^m), powers by repeated multiplication.
std::vector<Scalar> power_traces(const Matrix& a, std::size_t m) {
  std::vector<Scalar> tr;
  tr.reserve(m);
  Matrix p = a;
  for (std::size_t i = 1; i <= m; ++i) {
    tr.push_back(p.trace());
    if (i < m) p = p * a;
  }
  return tr;
}

bool is_lower_triangular(const Matrix& a) {
  for (std::size_t i = 1; i <= a.rows(); ++i)
    for (std::size_t j = i + 1; j <= a.cols(); ++j)
      if (!a.entry(i, j).is_zero()) return false;
  return true;
}

bool is_upper_triangular(const Matrix& a) {
  for (std::size_t i = 2; i <= a.rows(); ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (!a.entry(i, j).is_zero()) return false;
  return true;
}

Matrix product_tree(const std::vector<Matrix>& cs, std::size_t lo, std::size_t hi,
                    int depth, bool parallel) {
  if (lo == hi) return cs[lo];
  std::size_t mid = lo + (hi - lo) / 2;
  if (parallel && depth < 2 && hi - lo >= 3) {
    auto left = std::async(std::launch::async, [&] {
      return product_tree(cs, lo, mid, depth + 1, parallel);
    });
    Matrix right = product_tree(cs, mid + 1, hi, depth + 1, parallel);
    return left.get() * right;
  }
  Matrix left = product_tree(cs, lo, mid, depth + 1, parallel);
  Matrix right = product_tree(cs, mid + 1, hi, depth + 1, parallel);
  return left * right;
}

// Determinant of a square matrix of polynomials by cofactor expansion
// along the first row.
Poly poly_det(const std::vector<std::vector<Poly>>& m, const Field& F) {
  std::size_t n = m.size();
  if (n == 0) return Poly::constant(F.one());
  if (n == 1) return m[0][0];
  Poly det(F);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * poly_det(minor, F);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace

const char* alg_name(Alg a) noexcept {
  switch (a) {
    case Alg::csanky: return "csanky";
    case Alg::berkowitz: return "berkowitz";
    case Alg::oracle: return "oracle";
  }
  return "?";
}

NewtonCoeffs newton_coeffs(const Matrix& a) {
  require_square(a, "newton_coeffs");
  require_characteristic(a);
  const Field& F = a.field();
  std::size_t n = a.rows();
  std::vector<Scalar> tr = power_traces(a, n);
  std::vector<Scalar> s;
  s.reserve(n + 1);
  s.push_back(F.one());
  for (std::size_t k = 1; k <= n; ++k) {
    Scalar acc = F.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      Scalar term = s[k - i] * tr[i - 1];
      acc = (i % 2 == 1) ? acc + term : acc - term;
    }
    s.push_back(acc / F.from_integer(static_cast<long long>(k)));
  }
  return NewtonCoeffs{std::move(s)};
}

CharPoly to_charpoly(const NewtonCoeffs& nc) {
  std::size_t n = nc.s.size() - 1;
  const Field& F = nc.s[0].field();
  std::vector<Scalar> asc(n + 1, F.zero());
  for (std::size_t i = 0; i <= n; ++i) asc[n - i] = (i % 2 == 0) ? nc.s[i] : -nc.s[i];
  return make_charpoly(Poly::from_coeffs(F, std::move(asc)), n, Provenance::newton);
}

Matrix triangular_inverse(const Matrix& c) {
  require_square(c, "triangular_inverse");
  if (!is_lower_triangular(c)) fail(Errc::NotTriangular, "triangular_inverse needs lower-triangular input");
  std::size_t k = c.rows();
  for (std::size_t i = 1; i <= k; ++i)
    if (c.entry(i, i).is_zero())
      fail(Errc::SingularDiagonal, "zero diagonal entry at " + std::to_string(i));
  if (k == 1) return Matrix::build(c.field(), 1, 1, [&](std::size_t, std::size_t) {
    return c.entry(1, 1).inv();
  });
  std::size_t h = (k + 1) / 2;  // split at ceil(k/2)
  auto [c1, zero_block, e, c2] = split2x2(c, h);
  (void)zero_block;
  Matrix c1i = triangular_inverse(c1);
  Matrix c2i = triangular_inverse(c2);
  Matrix lower_left = Matrix::zero(c.field(), k - h, h) - c2i * e * c1i;
  return block2x2(c1i, Matrix::zero(c.field(), h, k - h), lower_left, c2i);
}

CharPoly csanky(const Matrix& a) {
  require_square(a, "csanky");
  require_characteristic(a);
  const Field& F = a.field();
  std::size_t n = a.rows();
  if (n == 0)
    return make_charpoly(Poly::constant(F.one()), 0, Provenance::csanky);
  std::vector<Scalar> tr = power_traces(a, n);

  // T_{kj} = (-1)^{k-j-1} (1/k) tr(A^{k-j}) below the diagonal,
  // b_k = (-1)^{k-1} (1/k) tr(A^k); then (I - T)s = b reproduces the
  // alternating signs of the plain recurrence.
  std::vector<Scalar> inv_k;
  inv_k.reserve(n + 1);
  inv_k.push_back(F.one());  // unused slot 0
  for (std::size_t k = 1; k <= n; ++k)
    inv_k.push_back(F.from_integer(static_cast<long long>(k)).inv());
  Matrix t = Matrix::build(F, n, n, [&](std::size_t k, std::size_t j) {
    if (j >= k) return F.zero();
    Scalar v = inv_k[k] * tr[k - j - 1];
    return ((k - j - 1) % 2 == 0) ? v : -v;
  });
  Matrix b = Matrix::build(F, n, 1, [&](std::size_t k, std::size_t) {
    Scalar v = inv_k[k] * tr[k - 1];
    return ((k - 1) % 2 == 0) ? v : -v;
  });
  Matrix s_col = triangular_inverse(Matrix::identity(F, n) - t) * b;

  std::vector<Scalar> s;
  s.reserve(n + 1);
  s.push_back(F.one());
  for (std::size_t k = 1; k <= n; ++k) s.push_back(s_col.entry(k, 1));
  CharPoly p = to_charpoly(NewtonCoeffs{std::move(s)});
  p.provenance = Provenance::csanky;
  return p;
}

CharPoly triangular_charpoly(const Matrix& c) {
  require_square(c, "triangular_charpoly");
  if (!is_lower_triangular(c) && !is_upper_triangular(c))
    fail(Errc::NotTriangular, "triangular_charpoly needs a triangular matrix");
  const Field& F = c.field();
  Poly p = Poly::constant(F.one());
  for (std::size_t i = 1; i <= c.rows(); ++i)
    p = p * Poly::from_coeffs(F, {-c.entry(i, i), F.one()});
  return make_charpoly(std::move(p), c.rows(), Provenance::triangular);
}

Matrix berkowitz_column(const Matrix& a) {
  require_square(a, "berkowitz_column");
  const Field& F = a.field();
  std::size_t n = a.rows();
  if (n == 0) fail(Errc::ZeroDimension, "berkowitz_column of an empty matrix");

  // First column: (1, -a11, -RS, -RMS, -RM^2 S, ...).
  std::vector<Scalar> col;
  col.reserve(n + 1);
  col.push_back(F.one());
  col.push_back(-a.entry(1, 1));
  if (n >= 2) {
    auto [a11, r, s, m] = split2x2(a, 1);
    (void)a11;
    Matrix v = s;
    for (std::size_t i = 3; i <= n + 1; ++i) {
      col.push_back(-(r * v).entry(1, 1));
      if (i < n + 1) v = m * v;
    }
  }
  return Matrix::build(F, n + 1, n, [&](std::size_t i, std::size_t j) {
    return i >= j ? col[i - j] : F.zero();
  });
}

CharPoly berkowitz(const Matrix& a, ProductMode mode, bool parallel) {
  require_square(a, "berkowitz");
  const Field& F = a.field();
  std::size_t n = a.rows();
  if (n == 0)
    return make_charpoly(Poly::constant(F.one()), 0, Provenance::berkowitz);

  // Toeplitz factor per principal sub-matrix; the last is (1 -a_nn)^t.
  std::vector<Matrix> cs;
  cs.reserve(n);
  Matrix sub = a;
  for (std::size_t i = 1; i <= n; ++i) {
    cs.push_back(berkowitz_column(sub));
    if (i < n) sub = sub.sub(2, sub.rows(), 2, sub.cols());
  }

  Matrix p = [&] {
    if (mode == ProductMode::tree) return product_tree(cs, 0, cs.size() - 1, 0, parallel);
    Matrix v = cs.back();
    for (std::size_t i = cs.size() - 1; i-- > 0;) v = cs[i] * v;
    return v;
  }();

  // p is (p_n, ..., p_0)^t; reverse into ascending order.
  std::vector<Scalar> asc;
  asc.reserve(n + 1);
  for (std::size_t i = n + 1; i-- > 0;) asc.push_back(p.entry(i + 1, 1));
  return make_charpoly(Poly::from_coeffs(F, std::move(asc)), n, Provenance::berkowitz);
}

CharPoly charpoly_oracle(const Matrix& a) {
  require_square(a, "charpoly_oracle");
  std::size_t n = a.rows();
  if (n > 8) fail(Errc::TooLarge, "cofactor oracle limited to n <= 8, got " + std::to_string(n));
  const Field& F = a.field();
  std::vector<std::vector<Poly>> xi_minus_a(n, std::vector<Poly>(n, Poly(F)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar c0 = -a.entry(i + 1, j + 1);
      xi_minus_a[i][j] = (i == j) ? Poly::from_coeffs(F, {c0, F.one()})
                                  : Poly::from_coeffs(F, {c0});
    }
  return make_charpoly(poly_det(xi_minus_a, F), n, Provenance::oracle);
}

CharPoly charpoly(const Matrix& a, Alg alg) {
  switch (alg) {
    case Alg::csanky: return csanky(a);
    case Alg::berkowitz: return berkowitz(a);
    case Alg::oracle: return charpoly_oracle(a);
  }
  throw std::logic_error("unreachable");
}

Scalar determinant(const Matrix& a, Alg alg) {
  CharPoly p = charpoly(a, alg);
  Scalar c0 = p.poly.coeff(0);
  return (p.n % 2 == 0) ? c0 : -c0;
}

Matrix adjoint(const Matrix& a, Alg alg) {
  require_square(a, "adjoint");
  std::size_t n = a.rows();
  if (n == 0) return Matrix::empty(a.field());
  CharPoly p = charpoly(a, alg);
  const Field& F = a.field();
  // Horner on the characteristic polynomial with the constant term
  // dropped: H = A^{n-1} + p_{n-1} A^{n-2} + ... + p_1 I.
  Matrix id = Matrix::identity(F, n);
  Matrix h = id;  // coefficient of x^n is 1
  for (std::size_t i = n - 1; i >= 1; --i) h = h * a + p.poly.coeff(i) * id;
  return (n % 2 == 0) ? Matrix::zero(F, n, n) - h : h;
}

Matrix inverse(const Matrix& a, Alg alg) {
  Scalar det = determinant(a, alg);
  if (det.is_zero()) fail(Errc::Singular, "inverse of a singular matrix");
  return det.inv() * adjoint(a, alg);
}

CompanionSpec companion_spec_of(const Poly& g) {
  if (!g.is_monic() || g.degree() < 1)
    fail(Errc::BadIndex, "companion spec needs a monic polynomial of degree >= 1");
  std::size_t k = static_cast<std::size_t>(g.degree());
  std::vector<Scalar> c;
  c.reserve(k);
  for (std::size_t i = 1; i <= k; ++i) c.push_back(g.coeff(k - i));  // c_i = coeff of x^{k-i}
  return CompanionSpec{std::move(c)};
}

}  // namespace exalg
