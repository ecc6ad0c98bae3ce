// Constructive witnesses for the matrix principles: kernel vectors,
// Krylov local polynomials, basis extension, the invariant block form,
// minimal annihilating polynomials, inverse-or-zero-divisor (two
// constructions), Steinitz exchange, and powering via block inversion.
#pragma once

#include <optional>
#include <vector>

#include "exalg/charpoly.hpp"

namespace exalg {

// Nonzero x with Vx = 0 when the columns of V are dependent; nullopt
// when they are independent. Gaussian elimination, first-nonzero pivot
// rule, so witnesses are reproducible.
std::optional<Matrix> kernel_vector(const Matrix& v);

// Rank of the column span (same elimination as kernel_vector).
std::size_t rank(const Matrix& a);

struct KrylovResult {
  std::size_t k;  // first dependence index, k <= n
  Matrix basis;   // n x k, columns e_i, A e_i, ..., A^{k-1} e_i
  Poly g;         // monic of degree k with g(A) e_i = 0
};

// The local polynomial of e_i under A; NotSquare, BadIndex.
KrylovResult krylov_local_poly(const Matrix& a, std::size_t i);

// Completes independent columns to an invertible n x n matrix by
// greedily appending standard basis vectors (in index order) outside
// the current span; NotIndependent.
Matrix extend_to_basis(const Matrix& b);

// Change of basis exposing the A-invariant Krylov subspace of e_i. The
// Krylov block is ordered last, so PAP^{-1} = [[E, 0], [*, W]]: the
// upper-right (n-k) x k block is exactly zero, W (k x k) is the
// companion form of g, and charpoly(A) = g * charpoly(E). E is 0x0 when
// k = n.
struct BlockForm {
  Matrix p;
  Matrix w;
  Matrix e;
  std::size_t k;
  Poly g;
};
BlockForm invariant_block_form(const Matrix& a, std::size_t i);

// Monic polynomial of minimal degree with p(A) = 0, found by scanning
// the degree upward for the first dependence among vec(I), vec(A), ...
Poly annihilating_poly(const Matrix& a);

struct InverseOrZero {
  enum class Kind { Inverse, ZeroDivisor } kind;
  Matrix b;  // nonzero; A*b = I or A*b = 0
};

// Factor the annihilating polynomial as q(x) * x^s with q(0) != 0; an
// inverse comes out of q when q(A) = 0, otherwise q(A) A^k is a zero
// divisor for the largest k <= s-1 keeping it nonzero.
InverseOrZero inverse_or_zero_divisor(const Matrix& a);

// The same decision from linear dependence alone: append e_i as an
// extra column, take a kernel vector and read off either an inverse
// column or a zero-divisor column.
InverseOrZero dependence_to_inverse_or_zero(const Matrix& a);

struct SteinitzResult {
  std::vector<std::size_t> f;  // 1-based indices of evicted T-columns, |f| = cols(E)
  Matrix t_prime;              // [T without F | E], spans F^n
};

// Greedy Steinitz exchange: NotTotal unless rank(T) = n, NotIndependent
// unless E's columns are independent. Evicts the lowest-index
// still-original T-column with a nonzero coefficient.
SteinitzResult steinitz_exchange(const Matrix& t, const Matrix& e);

// [I, A, A^2, ..., A^{m-1}] read from the top block row of the inverse
// of I - N, where N carries m-1 copies of A on the block superdiagonal.
// I - N is unipotent, so its adjugate (division-free, Berkowitz) is its
// inverse and the reduction works over any field.
std::vector<Matrix> pow_via_inverse(const Matrix& a, std::size_t m);

}  // namespace exalg
