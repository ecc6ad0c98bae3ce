#include "exalg/matrix.hpp"

#include <string>

namespace exalg {

namespace {

std::string dims(const Matrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void check_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    fail(Errc::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

}  // namespace

Matrix Matrix::build(const Field& F, std::size_t m, std::size_t n, const Gen& gen) {
  if (m == 0 || n == 0) fail(Errc::ZeroDimension, "build(" + std::to_string(m) + ", " + std::to_string(n) + ")");
  std::vector<Scalar> e;
  e.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) e.push_back(gen(i, j));
  return Matrix(F, m, n, std::move(e));
}

Matrix Matrix::from_entries(const Field& F, std::size_t m, std::size_t n,
                            std::vector<Scalar> entries) {
  if (entries.size() != m * n)
    fail(Errc::DimensionMismatch, "entry count " + std::to_string(entries.size()) +
                                      " for " + std::to_string(m) + "x" + std::to_string(n));
  return Matrix(F, m, n, std::move(entries));
}

Matrix Matrix::zero(const Field& F, std::size_t m, std::size_t n) {
  return Matrix(F, m, n, std::vector<Scalar>(m * n, F.zero()));
}

Matrix Matrix::identity(const Field& F, std::size_t n) {
  std::vector<Scalar> e(n * n, F.zero());
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = F.one();
  return Matrix(F, n, n, std::move(e));
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

Scalar Matrix::entry(std::size_t i, std::size_t j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) return field_.zero();
  return at0(i - 1, j - 1);
}

Matrix Matrix::pad(std::size_t m, std::size_t n) const {
  std::vector<Scalar> e;
  e.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) e.push_back(entry(i, j));
  return Matrix(field_, m, n, std::move(e));
}

Matrix Matrix::transpose() const {
  std::vector<Scalar> e;
  e.reserve(rows_ * cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (std::size_t i = 0; i < rows_; ++i) e.push_back(at0(i, j));
  return Matrix(field_, cols_, rows_, std::move(e));
}

Scalar Matrix::trace() const {
  if (!is_square()) fail(Errc::NotSquare, "trace of " + dims(*this));
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < rows_; ++i) t = t + at0(i, i);
  return t;
}

Matrix Matrix::sub(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) const {
  bool rows_ok = i1 >= 1 && i2 <= rows_ && i1 <= i2 + 1;
  bool cols_ok = j1 >= 1 && j2 <= cols_ && j1 <= j2 + 1;
  if (!rows_ok || !cols_ok) fail(Errc::BadCut, "sub-block out of range");
  std::size_t m = i2 + 1 - i1, n = j2 + 1 - j1;
  std::vector<Scalar> e;
  e.reserve(m * n);
  for (std::size_t i = i1; i <= i2; ++i)
    for (std::size_t j = j1; j <= j2; ++j) e.push_back(at0(i - 1, j - 1));
  return Matrix(field_, m, n, std::move(e));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(Errc::DimensionMismatch, "add " + dims(a) + " + " + dims(b));
  std::vector<Scalar> e;
  e.reserve(a.e_.size());
  for (std::size_t i = 0; i < a.e_.size(); ++i) e.push_back(a.e_[i] + b.e_[i]);
  return Matrix(a.field_, a.rows_, a.cols_, std::move(e));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(Errc::DimensionMismatch, "sub " + dims(a) + " - " + dims(b));
  std::vector<Scalar> e;
  e.reserve(a.e_.size());
  for (std::size_t i = 0; i < a.e_.size(); ++i) e.push_back(a.e_[i] - b.e_[i]);
  return Matrix(a.field_, a.rows_, a.cols_, std::move(e));
}

Matrix operator*(const Scalar& a, const Matrix& b) {
  if (!(a.field() == b.field()))
    fail(Errc::FieldMismatch, a.field().name() + " vs " + b.field().name());
  std::vector<Scalar> e;
  e.reserve(b.e_.size());
  for (const auto& x : b.e_) e.push_back(a * x);
  return Matrix(b.field_, b.rows_, b.cols_, std::move(e));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "mul " + dims(a) + " * " + dims(b));
  std::vector<Scalar> e;
  e.reserve(a.rows_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Scalar s = a.field_.zero();
      for (std::size_t k = 0; k < a.cols_; ++k) s = s + a.at0(i, k) * b.at0(k, j);
      e.push_back(std::move(s));
    }
  }
  return Matrix(a.field_, a.rows_, b.cols_, std::move(e));
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

Matrix power(const Matrix& a, std::size_t k) {
  if (!a.is_square()) fail(Errc::NotSquare, "power of " + dims(a));
  Matrix r = Matrix::identity(a.field(), a.rows());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

Matrix block2x2(const Matrix& w, const Matrix& x, const Matrix& y, const Matrix& z) {
  if (!(w.field() == x.field()) || !(w.field() == y.field()) || !(w.field() == z.field()))
    fail(Errc::FieldMismatch, "block2x2 over mixed fields");
  if (w.rows() != x.rows() || y.rows() != z.rows() || w.cols() != y.cols() ||
      x.cols() != z.cols())
    fail(Errc::DimensionMismatch, "block2x2 blocks do not conform");
  std::size_t m = w.rows() + y.rows(), n = w.cols() + x.cols();
  return Matrix::build(w.field(), m, n, [&](std::size_t i, std::size_t j) {
    if (i <= w.rows()) return j <= w.cols() ? w.entry(i, j) : x.entry(i, j - w.cols());
    std::size_t ii = i - w.rows();
    return j <= w.cols() ? y.entry(ii, j) : z.entry(ii, j - w.cols());
  });
}

std::tuple<Matrix, Matrix, Matrix, Matrix> split2x2(const Matrix& a, std::size_t k) {
  if (!a.is_square()) fail(Errc::NotSquare, "split2x2 of " + dims(a));
  if (k < 1 || k >= a.rows())
    fail(Errc::BadCut, "cut " + std::to_string(k) + " on " + dims(a));
  std::size_t n = a.rows();
  return {a.sub(1, k, 1, k), a.sub(1, k, k + 1, n), a.sub(k + 1, n, 1, k),
          a.sub(k + 1, n, k + 1, n)};
}

Matrix companion(const CompanionSpec& spec) {
  std::size_t k = spec.coeffs.size();
  if (k == 0) fail(Errc::ZeroDimension, "companion of an empty coefficient list");
  const Field& F = spec.coeffs[0].field();
  return Matrix::build(F, k, k, [&](std::size_t i, std::size_t j) {
    if (j == k) return -spec.coeffs[k - i];  // last column: -c_{k+1-i}
    if (i == j + 1) return F.one();          // first subdiagonal
    return F.zero();
  });
}

Matrix unit_column(const Field& F, std::size_t n, std::size_t i) {
  if (i < 1 || i > n) fail(Errc::BadIndex, "unit_column index " + std::to_string(i));
  return Matrix::build(F, n, 1, [&](std::size_t r, std::size_t) {
    return r == i ? F.one() : F.zero();
  });
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) fail(Errc::FieldMismatch, "hconcat over mixed fields");
  if (a.rows() != b.rows()) fail(Errc::DimensionMismatch, "hconcat " + dims(a) + " | " + dims(b));
  return Matrix::build(a.field(), a.rows(), a.cols() + b.cols(),
                       [&](std::size_t i, std::size_t j) {
                         return j <= a.cols() ? a.entry(i, j) : b.entry(i, j - a.cols());
                       });
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) fail(Errc::FieldMismatch, "vconcat over mixed fields");
  if (a.cols() != b.cols()) fail(Errc::DimensionMismatch, "vconcat " + dims(a) + " / " + dims(b));
  return Matrix::build(a.field(), a.rows() + b.rows(), a.cols(),
                       [&](std::size_t i, std::size_t j) {
                         return i <= a.rows() ? a.entry(i, j) : b.entry(i - a.rows(), j);
                       });
}

}  // namespace exalg
