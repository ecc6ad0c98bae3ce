// Dense matrices over an exact field. Values are immutable; all
// operations return new matrices. Public indices are 1-based; the total
// accessor entry(i, j) reads 0 outside the stored range, while the
// algebraic operations are strict about dimensions.
#pragma once

#include <cstddef>
#include <functional>
#include <tuple>
#include <vector>

#include "exalg/field.hpp"

namespace exalg {

// Non-leading coefficients c1..ck of a monic polynomial
// g(x) = x^k + c1 x^{k-1} + ... + ck; k >= 1.
struct CompanionSpec {
  std::vector<Scalar> coeffs;
};

class Matrix {
 public:
  using Gen = std::function<Scalar(std::size_t, std::size_t)>;

  // gen receives 1-based (i, j); ZeroDimension when m or n is 0.
  static Matrix build(const Field& F, std::size_t m, std::size_t n, const Gen& gen);
  // Row-major entries; accepts 0x0 (used by block-form edge cases).
  static Matrix from_entries(const Field& F, std::size_t m, std::size_t n,
                             std::vector<Scalar> entries);
  static Matrix zero(const Field& F, std::size_t m, std::size_t n);
  static Matrix identity(const Field& F, std::size_t n);
  static Matrix empty(const Field& F) { return Matrix(F, 0, 0, {}); }

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_empty() const noexcept { return rows_ == 0 || cols_ == 0; }
  bool is_zero() const;

  // 1-based and total: 0 for i or j outside [1, rows] x [1, cols].
  Scalar entry(std::size_t i, std::size_t j) const;

  // Zero-extend (or crop) to m x n.
  Matrix pad(std::size_t m, std::size_t n) const;

  Matrix transpose() const;
  Scalar trace() const;  // NotSquare

  // Copy of the 1-based inclusive block [i1..i2] x [j1..j2]; empty
  // ranges (i1 = i2 + 1 or j1 = j2 + 1) give 0-sized results.
  Matrix sub(std::size_t i1, std::size_t i2, std::size_t j1, std::size_t j2) const;
  Matrix column(std::size_t j) const { return sub(1, rows_, j, j); }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Matrix(const Field& f, std::size_t r, std::size_t c, std::vector<Scalar> e)
      : field_(f), rows_(r), cols_(c), e_(std::move(e)) {}

  const Scalar& at0(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

// A^k by repeated multiplication (A^0 = I); NotSquare otherwise.
Matrix power(const Matrix& a, std::size_t k);

// [[W, X], [Y, Z]]; DimensionMismatch unless the blocks conform.
Matrix block2x2(const Matrix& w, const Matrix& x, const Matrix& y, const Matrix& z);

// Left inverse of block2x2 at cut k (W is k x k); BadCut unless
// 1 <= k < rows(A) and A is square.
std::tuple<Matrix, Matrix, Matrix, Matrix> split2x2(const Matrix& a, std::size_t k);

// k x k matrix with 1s on the first subdiagonal and last column
// (-ck, -c{k-1}, ..., -c1)^t.
Matrix companion(const CompanionSpec& spec);

// Column vector e_i of length n (1-based i).
Matrix unit_column(const Field& F, std::size_t n, std::size_t i);

Matrix hconcat(const Matrix& a, const Matrix& b);
Matrix vconcat(const Matrix& a, const Matrix& b);

}  // namespace exalg
