// Characteristic polynomials three ways: Newton's identities solved as a
// triangular system (Csanky), division-free iterated Toeplitz products
// (Berkowitz), and a brute-force cofactor oracle. Determinant, adjugate
// and inverse are derived from the characteristic polynomial.
#pragma once

#include "exalg/poly.hpp"

namespace exalg {

enum class Provenance { newton, csanky, berkowitz, triangular, oracle };
enum class Alg { csanky, berkowitz, oracle };

const char* alg_name(Alg a) noexcept;

// Monic degree-n representation of det(xI - A), ascending coefficients.
struct CharPoly {
  Poly poly;
  std::size_t n;
  Provenance provenance;
};

// Newton's symmetric polynomials s0..sn of A, s0 = 1.
struct NewtonCoeffs {
  std::vector<Scalar> s;
};

// The plain recurrence s_k = (1/k) sum_{i=1}^{k} (-1)^{i-1} s_{k-i} tr(A^i).
// CharacteristicTooSmall when 0 < char(F) <= n (the 1/k divisions fail).
NewtonCoeffs newton_coeffs(const Matrix& a);

// Coefficient of x^{n-i} is (-1)^i s_i; monic by construction.
CharPoly to_charpoly(const NewtonCoeffs& s);

// Newton's recurrence restated as a unit lower-triangular system
// (I - T)s = b and solved with the recursive block inverse. The signs of
// T and b alternate so that the solution matches the plain recurrence.
CharPoly csanky(const Matrix& a);

// Recursive block inversion of a lower-triangular matrix, split at
// ceil(k/2); NotTriangular / SingularDiagonal.
Matrix triangular_inverse(const Matrix& c);

// prod_i (x - c_ii) for an upper- or lower-triangular matrix.
CharPoly triangular_charpoly(const Matrix& c);

// The (n+1) x n lower-triangular Toeplitz factor for A: first column
// (1, -a11, -RS, -RMS, -RM^2S, ...), each later column shifted down.
Matrix berkowitz_column(const Matrix& a);

enum class ProductMode { sequential, tree };

// Division-free over any field. sequential folds the Toeplitz factors
// right-to-left as matrix-vector products; tree multiplies them as a
// balanced binary tree (optionally evaluating halves concurrently) and
// is bit-identical to sequential.
CharPoly berkowitz(const Matrix& a, ProductMode mode = ProductMode::sequential,
                   bool parallel = false);

// Cofactor expansion of det(xI - A) over the polynomial ring; ground
// truth for n <= 8, TooLarge beyond.
CharPoly charpoly_oracle(const Matrix& a);

CharPoly charpoly(const Matrix& a, Alg alg);

// (-1)^n p(0) for the selected characteristic polynomial.
Scalar determinant(const Matrix& a, Alg alg = Alg::berkowitz);

// B = (-1)^{n+1} (A^{n-1} + p_{n-1} A^{n-2} + ... + p_1 I), so that
// A*B = B*A = det(A)*I exactly.
Matrix adjoint(const Matrix& a, Alg alg = Alg::berkowitz);

// adjoint / det; Singular when det = 0.
Matrix inverse(const Matrix& a, Alg alg = Alg::berkowitz);

// Companion data of a monic polynomial of degree >= 1.
CompanionSpec companion_spec_of(const Poly& g);

}  // namespace exalg
