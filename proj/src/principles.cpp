#include "exalg/principles.hpp"

#include <string>

namespace exalg {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square())
    fail(Errc::NotSquare, std::string(op) + " on a " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " matrix");
}

// Reduced row echelon form with recorded pivot columns (0-based).
// Pivot rule: first nonzero entry in column order.
struct Rref {
  std::vector<std::vector<Scalar>> rows;
  std::vector<std::size_t> pivot_cols;
};

Rref rref_of(const Matrix& a) {
  std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(m);
  for (std::size_t i = 1; i <= m; ++i) {
    std::vector<Scalar> row;
    row.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) row.push_back(a.entry(i, j));
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && rows[sel][c].is_zero()) ++sel;
    if (sel == m) continue;
    std::swap(rows[sel], rows[r]);
    Scalar piv_inv = rows[r][c].inv();
    for (std::size_t j = c; j < n; ++j) rows[r][j] = rows[r][j] * piv_inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = c; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return Rref{std::move(rows), std::move(pivots)};
}

// Particular solution of S x = v (free variables 0); nullopt when
// inconsistent.
std::optional<Matrix> solve(const Matrix& s, const Matrix& v) {
  Rref rr = rref_of(hconcat(s, v));
  std::size_t n = s.cols();
  const Field& F = s.field();
  std::vector<Scalar> x(n, F.zero());
  for (std::size_t t = 0; t < rr.pivot_cols.size(); ++t) {
    std::size_t c = rr.pivot_cols[t];
    if (c >= n) return std::nullopt;  // pivot in the augmented column
    x[c] = rr.rows[t][n];
  }
  return Matrix::from_entries(F, n, 1, std::move(x));
}

bool in_span(const Matrix& basis_cols, const Matrix& v) {
  if (basis_cols.cols() == 0) return v.is_zero();
  return solve(basis_cols, v).has_value();
}

// Column j of a flattened into an n^2-vector (column of the stack).
Matrix vec_of(const Matrix& a) {
  std::size_t n = a.rows();
  return Matrix::build(a.field(), n * n, 1, [&](std::size_t r, std::size_t) {
    return a.entry((r - 1) / n + 1, (r - 1) % n + 1);
  });
}

}  // namespace

std::optional<Matrix> kernel_vector(const Matrix& v) {
  std::size_t m = v.cols();
  Rref rr = rref_of(v);
  if (rr.pivot_cols.size() == m) return std::nullopt;
  // First free column f; x has the combination coefficients at the
  // pivot positions and -1 at f, so Vx = 0.
  std::size_t f = 0;
  {
    std::size_t t = 0;
    while (t < rr.pivot_cols.size() && rr.pivot_cols[t] == f) {
      ++t;
      ++f;
    }
  }
  const Field& F = v.field();
  std::vector<Scalar> x(m, F.zero());
  for (std::size_t t = 0; t < rr.pivot_cols.size() && rr.pivot_cols[t] < f; ++t)
    x[rr.pivot_cols[t]] = rr.rows[t][f];
  x[f] = -F.one();
  return Matrix::from_entries(F, m, 1, std::move(x));
}

std::size_t rank(const Matrix& a) { return rref_of(a).pivot_cols.size(); }

KrylovResult krylov_local_poly(const Matrix& a, std::size_t i) {
  require_square(a, "krylov_local_poly");
  std::size_t n = a.rows();
  if (i < 1 || i > n) fail(Errc::BadIndex, "index " + std::to_string(i) + " for n = " + std::to_string(n));
  const Field& F = a.field();
  Matrix v = unit_column(F, n, i);
  Matrix basis = v;
  std::size_t k = 1;
  // e_i itself is nonzero, so the basis starts with one vector.
  while (true) {
    v = a * v;
    if (auto coeffs = solve(basis, v)) {
      // A^k e_i = sum alpha_j A^j e_i  =>  g = x^k - sum alpha_j x^j
      std::vector<Scalar> g(k + 1, F.zero());
      for (std::size_t j = 0; j < k; ++j) g[j] = -coeffs->entry(j + 1, 1);
      g[k] = F.one();
      return KrylovResult{k, basis, Poly::from_coeffs(F, std::move(g))};
    }
    basis = hconcat(basis, v);
    ++k;
    if (k > n) throw std::logic_error("Krylov sequence exceeded the dimension");
  }
}

Matrix extend_to_basis(const Matrix& b) {
  std::size_t n = b.rows(), k = b.cols();
  if (rank(b) != k) fail(Errc::NotIndependent, "columns are linearly dependent");
  Matrix full = b;
  for (std::size_t j = 1; j <= n && full.cols() < n; ++j) {
    Matrix ej = unit_column(b.field(), n, j);
    if (!in_span(full, ej)) full = hconcat(full, ej);
  }
  if (full.cols() != n) throw std::logic_error("basis extension fell short");
  return full;
}

BlockForm invariant_block_form(const Matrix& a, std::size_t i) {
  require_square(a, "invariant_block_form");
  std::size_t n = a.rows();
  KrylovResult kr = krylov_local_poly(a, i);
  Matrix full = extend_to_basis(kr.basis);  // [krylov | extension]
  // Order the extension first so the invariant subspace occupies the
  // last k coordinates: the upper-right block of PAP^{-1} vanishes.
  Matrix q = (kr.k == n) ? full : hconcat(full.sub(1, n, kr.k + 1, n), kr.basis);
  Matrix p = inverse(q, Alg::berkowitz);
  Matrix m = p * a * q;
  Matrix w = m.sub(n - kr.k + 1, n, n - kr.k + 1, n);
  Matrix e = (kr.k == n) ? Matrix::empty(a.field()) : m.sub(1, n - kr.k, 1, n - kr.k);
  return BlockForm{std::move(p), std::move(w), std::move(e), kr.k, std::move(kr.g)};
}

Poly annihilating_poly(const Matrix& a) {
  require_square(a, "annihilating_poly");
  const Field& F = a.field();
  std::size_t n = a.rows();
  if (n == 0) return Poly::constant(F.one());
  // Stack vec(A^0), vec(A^1), ... as columns until the first dependence;
  // the minimal polynomial has degree <= n, so this stops by degree n.
  Matrix stack = vec_of(Matrix::identity(F, n));
  Matrix p = Matrix::identity(F, n);
  for (std::size_t d = 1; d <= n; ++d) {
    p = p * a;
    stack = hconcat(stack, vec_of(p));
    if (auto x = kernel_vector(stack)) {
      // All proper prefixes are independent, so the kernel vector has a
      // nonzero coefficient on vec(A^d). The dependence reads
      // sum_j x_{j+1} A^j = 0; dividing by the leading coefficient
      // makes it monic.
      Scalar lead_inv = x->entry(d + 1, 1).inv();
      std::vector<Scalar> c;
      c.reserve(d + 1);
      for (std::size_t j = 0; j < d; ++j) c.push_back(lead_inv * x->entry(j + 1, 1));
      c.push_back(F.one());
      return Poly::from_coeffs(F, std::move(c));
    }
  }
  throw std::logic_error("no annihilating polynomial up to degree n");
}

InverseOrZero inverse_or_zero_divisor(const Matrix& a) {
  require_square(a, "inverse_or_zero_divisor");
  const Field& F = a.field();
  Poly p = annihilating_poly(a);
  // p = q * x^s with q(0) != 0.
  std::size_t s = 0;
  while (p.coeff(s).is_zero()) ++s;
  std::vector<Scalar> qc;
  for (std::size_t j = s; j <= static_cast<std::size_t>(p.degree()); ++j)
    qc.push_back(p.coeff(j));
  Poly q = Poly::from_coeffs(F, std::move(qc));

  Matrix qa = eval_matrix(q, a);
  if (qa.is_zero()) {
    // q(A) = q(0) I + A r(A) = 0 with r = (q - q(0)) / x, so the inverse
    // is -r(A) / q(0).
    std::vector<Scalar> rc;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(q.degree()); ++j)
      rc.push_back(q.coeff(j));
    Poly r = Poly::from_coeffs(F, std::move(rc));
    Scalar scale = -(q.coeff(0).inv());
    return InverseOrZero{InverseOrZero::Kind::Inverse, scale * eval_matrix(r, a)};
  }
  // Largest k <= s-1 with q(A) A^k != 0; then q(A) A^{k+1} = 0.
  Matrix b = qa;
  std::size_t k = 0;
  while (k + 1 < s) {
    Matrix next = b * a;
    if (next.is_zero()) break;
    b = std::move(next);
    ++k;
  }
  return InverseOrZero{InverseOrZero::Kind::ZeroDivisor, std::move(b)};
}

InverseOrZero dependence_to_inverse_or_zero(const Matrix& a) {
  require_square(a, "dependence_to_inverse_or_zero");
  const Field& F = a.field();
  std::size_t n = a.rows();
  std::vector<Matrix> inv_cols;
  inv_cols.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    Matrix aug = hconcat(a, unit_column(F, n, i));
    auto x = kernel_vector(aug);
    if (!x) throw std::logic_error("n+1 vectors in F^n reported independent");
    Scalar last = x->entry(n + 1, 1);
    Matrix head = x->sub(1, n, 1, 1);
    if (last.is_zero()) {
      // A * head = 0 with head != 0: replicate the column into a full
      // zero divisor.
      Matrix b = Matrix::build(F, n, n, [&](std::size_t r, std::size_t) {
        return head.entry(r, 1);
      });
      return InverseOrZero{InverseOrZero::Kind::ZeroDivisor, std::move(b)};
    }
    inv_cols.push_back((-last.inv()) * head);  // A * col = e_i
  }
  Matrix b = Matrix::build(F, n, n, [&](std::size_t r, std::size_t c) {
    return inv_cols[c - 1].entry(r, 1);
  });
  return InverseOrZero{InverseOrZero::Kind::Inverse, std::move(b)};
}

SteinitzResult steinitz_exchange(const Matrix& t, const Matrix& e) {
  if (!(t.field() == e.field())) fail(Errc::FieldMismatch, "T and E over different fields");
  if (t.rows() != e.rows()) fail(Errc::DimensionMismatch, "T and E have different heights");
  std::size_t n = t.rows(), m = t.cols(), k = e.cols();
  if (rank(t) != n) fail(Errc::NotTotal, "columns of T do not span F^n");
  if (rank(e) != k) fail(Errc::NotIndependent, "columns of E are linearly dependent");

  // Working set starts as T; each exchange replaces one still-original
  // column in place.
  std::vector<Matrix> work;
  work.reserve(m);
  for (std::size_t j = 1; j <= m; ++j) work.push_back(t.column(j));
  std::vector<bool> original(m, true);
  std::vector<std::size_t> f;
  f.reserve(k);

  for (std::size_t j = 1; j <= k; ++j) {
    Matrix ej = e.column(j);
    Matrix cur = work[0];
    for (std::size_t c = 1; c < m; ++c) cur = hconcat(cur, work[c]);
    auto x = solve(cur, ej);
    if (!x) throw std::logic_error("working set lost totality");
    // Independence of E guarantees some still-original column carries a
    // nonzero coefficient; evict the lowest-index one.
    std::size_t evict = 0;
    bool found = false;
    for (std::size_t c = 0; c < m; ++c) {
      if (original[c] && !x->entry(c + 1, 1).is_zero()) {
        evict = c;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("exchange found no original column to evict");
    work[evict] = ej;
    original[evict] = false;
    f.push_back(evict + 1);
  }

  // T' = [columns of T not in F | columns of E].
  std::vector<Matrix> cols;
  cols.reserve(m);
  for (std::size_t c = 0; c < m; ++c)
    if (original[c]) cols.push_back(t.column(c + 1));
  for (std::size_t j = 1; j <= k; ++j) cols.push_back(e.column(j));
  Matrix t_prime = cols[0];
  for (std::size_t c = 1; c < cols.size(); ++c) t_prime = hconcat(t_prime, cols[c]);
  return SteinitzResult{std::move(f), std::move(t_prime)};
}

std::vector<Matrix> pow_via_inverse(const Matrix& a, std::size_t m) {
  require_square(a, "pow_via_inverse");
  if (m < 1) fail(Errc::BadIndex, "power count must be >= 1");
  const Field& F = a.field();
  std::size_t n = a.rows();
  // I - N, with m-1 copies of A on the block superdiagonal of N.
  Matrix in = Matrix::build(F, n * m, n * m, [&](std::size_t i, std::size_t j) {
    std::size_t bi = (i - 1) / n, bj = (j - 1) / n;
    std::size_t ri = (i - 1) % n + 1, rj = (j - 1) % n + 1;
    if (bi == bj) return ri == rj ? F.one() : F.zero();
    if (bj == bi + 1) return -a.entry(ri, rj);
    return F.zero();
  });
  // Unipotent, so det = 1 and the (division-free) adjugate is the
  // inverse: its top block row is I, A, A^2, ...
  if (!determinant(in, Alg::berkowitz).is_one())
    throw std::logic_error("block-unipotent matrix with determinant != 1");
  Matrix inv = adjoint(in, Alg::berkowitz);
  std::vector<Matrix> powers;
  powers.reserve(m);
  for (std::size_t j = 0; j < m; ++j) powers.push_back(inv.sub(1, n, j * n + 1, (j + 1) * n));
  return powers;
}

}  // namespace exalg
