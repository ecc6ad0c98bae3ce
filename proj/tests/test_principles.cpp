#include <doctest.h>

#include "exalg/principles.hpp"
#include "exalg/rng.hpp"
#include "exalg/verify.hpp"

using namespace exalg;

namespace {

const Field Q = Field::rationals();

Scalar qi(long long k) { return Q.from_integer(k); }

Matrix mat(std::size_t m, std::size_t n, std::initializer_list<long long> vals) {
  std::vector<Scalar> e;
  for (long long v : vals) e.push_back(qi(v));
  return Matrix::from_entries(Q, m, n, std::move(e));
}

Poly qpoly(std::initializer_list<long long> asc) {
  std::vector<Scalar> c;
  for (long long v : asc) c.push_back(qi(v));
  return Poly::from_coeffs(Q, std::move(c));
}

bool annihilated_by(const Matrix& a, const Poly& p) { return eval_matrix(p, a).is_zero(); }

}  // namespace

TEST_SUITE("principles") {
  TEST_CASE("kernel vector of dependent columns") {
    Matrix v = mat(2, 3, {1, 0, 1, 0, 1, 1});  // e1, e2, e1+e2
    auto x = kernel_vector(v);
    REQUIRE(x.has_value());
    CHECK(x->entry(1, 1) == qi(1));
    CHECK(x->entry(2, 1) == qi(1));
    CHECK(x->entry(3, 1) == qi(-1));
    CHECK((v * *x).is_zero());

    CHECK(!kernel_vector(Matrix::identity(Q, 2)).has_value());

    auto z = kernel_vector(Matrix::zero(Q, 3, 1));
    REQUIRE(z.has_value());
    CHECK(!z->is_zero());
    SplitMix64 rng(50);
    for (int t = 0; t < 50; ++t) {
      std::size_t n = 1 + rng.below(5);
      Matrix w = random_matrix(rng, Q, n, n + 1);  // always dependent
      auto k = kernel_vector(w);
      REQUIRE(k.has_value());
      CHECK(!k->is_zero());
      CHECK((w * *k).is_zero());
    }
  }

  TEST_CASE("krylov local polynomial") {
    Matrix shift = mat(2, 2, {0, 1, 0, 0});
    KrylovResult r1 = krylov_local_poly(shift, 1);
    CHECK(r1.k == 1);
    CHECK(r1.g == qpoly({0, 1}));
    KrylovResult r2 = krylov_local_poly(shift, 2);
    CHECK(r2.k == 2);
    CHECK(r2.g == qpoly({0, 0, 1}));

    CHECK_THROWS_AS(krylov_local_poly(shift, 0), Error);
    CHECK_THROWS_AS(krylov_local_poly(shift, 3), Error);
    CHECK_THROWS_AS(krylov_local_poly(mat(1, 2, {1, 2}), 1), Error);

    // e_1 is cyclic for a companion matrix: the local polynomial is g
    // itself, including polynomials with c_k = 0.
    SplitMix64 rng(51);
    for (int t = 0; t < 40; ++t) {
      std::size_t k = 1 + rng.below(6);
      Poly g = random_monic(rng, Q, k);
      Matrix a = companion(companion_spec_of(g));
      KrylovResult r = krylov_local_poly(a, 1);
      CHECK(r.k == k);
      CHECK(r.g == g);
    }
    {
      Poly g = qpoly({0, 0, 1});  // x^2, c2 = 0
      KrylovResult r = krylov_local_poly(companion(companion_spec_of(g)), 1);
      CHECK(r.g == g);
    }

    // the invariant g(A) e_i = 0 on random matrices
    for (int t = 0; t < 40; ++t) {
      std::size_t n = 1 + rng.below(5);
      Matrix a = random_matrix(rng, Q, n, n);
      for (std::size_t i = 1; i <= n; ++i) {
        KrylovResult r = krylov_local_poly(a, i);
        CHECK(r.k <= n);
        CHECK(rank(r.basis) == r.k);
        CHECK((eval_matrix(r.g, a) * unit_column(Q, n, i)).is_zero());
      }
    }
  }

  TEST_CASE("basis extension") {
    Matrix e2 = unit_column(Q, 2, 2);
    CHECK(extend_to_basis(e2) == mat(2, 2, {0, 1, 1, 0}));
    Matrix ones = mat(2, 1, {1, 1});
    Matrix ext = extend_to_basis(ones);
    CHECK(ext == mat(2, 2, {1, 1, 1, 0}));
    CHECK(!determinant(ext).is_zero());
    CHECK(extend_to_basis(Matrix::identity(Q, 3)) == Matrix::identity(Q, 3));
    CHECK_THROWS_AS(extend_to_basis(mat(2, 2, {1, 2, 2, 4})), Error);
  }

  TEST_CASE("invariant block form examples") {
    {
      BlockForm bf = invariant_block_form(mat(2, 2, {2, 0, 0, 3}), 1);
      CHECK(bf.k == 1);
      CHECK(bf.w == mat(1, 1, {2}));
      CHECK(bf.e == mat(1, 1, {3}));
    }
    {
      Matrix shift = mat(2, 2, {0, 1, 0, 0});
      BlockForm bf = invariant_block_form(shift, 2);
      CHECK(bf.k == 2);
      CHECK(bf.e.is_empty());
      CHECK(berkowitz(bf.w).poly == berkowitz(shift).poly);  // similar to A
    }
  }

  TEST_CASE("invariant block form structure on random matrices") {
    SplitMix64 rng(52);
    int nontrivial = 0;
    for (int t = 0; t < 60; ++t) {
      std::size_t n = 1 + rng.below(4);
      Matrix a = random_matrix(rng, Q, n, n);
      for (std::size_t i = 1; i <= n; ++i) {
        BlockForm bf = invariant_block_form(a, i);
        Matrix conj = bf.p * a * inverse(bf.p);
        // the Krylov block sits last: the upper-right (n-k) x k block of
        // PAP^{-1} is exactly zero
        if (bf.k < n) {
          ++nontrivial;
          Matrix upper_right = conj.sub(1, n - bf.k, n - bf.k + 1, n);
          CHECK(upper_right.is_zero());
          CHECK(bf.e == conj.sub(1, n - bf.k, 1, n - bf.k));
        }
        CHECK(bf.w == conj.sub(n - bf.k + 1, n, n - bf.k + 1, n));
        // W is the companion form of g
        CHECK(bf.w == companion(companion_spec_of(bf.g)));
        CHECK(berkowitz(bf.w).poly == bf.g);
        // charpoly(A) = g * charpoly(E)
        CHECK(berkowitz(a).poly == bf.g * berkowitz(bf.e).poly);
      }
    }
    CHECK(nontrivial > 0);  // the corpus must exercise k < n
  }

  TEST_CASE("factored characteristic evaluation") {
    SplitMix64 rng(53);
    for (int t = 0; t < 30; ++t) {
      std::size_t n = 1 + rng.below(4);
      Matrix a = random_matrix(rng, Q, n, n);
      Poly p = berkowitz(a).poly;
      CHECK(eval_matrix(p, a).is_zero());
      for (std::size_t i = 1; i <= n; ++i) {
        BlockForm bf = invariant_block_form(a, i);
        Matrix ei = unit_column(Q, n, i);
        Matrix gi = eval_matrix(bf.g, a) * ei;
        CHECK(gi.is_zero());
        Matrix pe = eval_matrix(berkowitz(bf.e).poly, a);
        CHECK((pe * gi).is_zero());
        CHECK((eval_matrix(p, a) * ei).is_zero());
      }
    }
  }

  TEST_CASE("annihilating polynomial") {
    CHECK(annihilating_poly(Matrix::identity(Q, 2)) == qpoly({-1, 1}));
    CHECK(annihilating_poly(mat(2, 2, {0, 1, 0, 0})) == qpoly({0, 0, 1}));
    Matrix d12 = mat(2, 2, {1, 0, 0, 2});
    Poly p = annihilating_poly(d12);
    CHECK(p == qpoly({2, -3, 1}));
    CHECK(annihilated_by(d12, p));
    // no monic degree-1 polynomial annihilates diag(1, 2)
    for (long long c = -10; c <= 10; ++c)
      CHECK(!annihilated_by(d12, qpoly({c, 1})));
  }

  TEST_CASE("annihilating polynomial divides the characteristic polynomial") {
    SplitMix64 rng(54);
    for (const Field& F : {Field::rationals(), Field::gf(2), Field::gf(5)}) {
      for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + rng.below(6);
        Matrix a = random_matrix(rng, F, n, n);
        Poly p = annihilating_poly(a);
        CHECK(p.is_monic());
        CHECK(annihilated_by(a, p));
        auto [q, r] = poly_divmod(berkowitz(a).poly, p);
        (void)q;
        CHECK(r.is_zero());
      }
    }
  }

  TEST_CASE("inverse or zero divisor") {
    {
      InverseOrZero w = inverse_or_zero_divisor(Matrix::identity(Q, 2));
      CHECK(w.kind == InverseOrZero::Kind::Inverse);
      CHECK(w.b == Matrix::identity(Q, 2));
    }
    {
      InverseOrZero w = inverse_or_zero_divisor(Matrix::zero(Q, 2, 2));
      CHECK(w.kind == InverseOrZero::Kind::ZeroDivisor);
      CHECK(w.b == Matrix::identity(Q, 2));
    }
    {
      Matrix a = mat(2, 2, {1, 0, 0, 0});
      InverseOrZero w = inverse_or_zero_divisor(a);
      CHECK(w.kind == InverseOrZero::Kind::ZeroDivisor);
      CHECK(w.b == mat(2, 2, {0, 0, 0, -1}));  // A - I
      CHECK((a * w.b).is_zero());
    }
  }

  TEST_CASE("dependence-based construction and agreement") {
    {
      InverseOrZero w = dependence_to_inverse_or_zero(Matrix::identity(Q, 2));
      CHECK(w.kind == InverseOrZero::Kind::Inverse);
      CHECK(w.b == Matrix::identity(Q, 2));
    }
    {
      InverseOrZero w = dependence_to_inverse_or_zero(Matrix::zero(Q, 2, 2));
      CHECK(w.kind == InverseOrZero::Kind::ZeroDivisor);
      CHECK(!w.b.is_zero());
    }
    {
      Matrix a = mat(2, 2, {1, 2, 2, 4});
      InverseOrZero w = dependence_to_inverse_or_zero(a);
      CHECK(w.kind == InverseOrZero::Kind::ZeroDivisor);
      CHECK(!w.b.is_zero());
      CHECK((a * w.b).is_zero());
    }

    SplitMix64 rng(55);
    for (const Field& F : {Field::rationals(), Field::gf(5)}) {
      for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.below(5);
        Matrix a = random_matrix(rng, F, n, n);
        InverseOrZero w1 = inverse_or_zero_divisor(a);
        InverseOrZero w2 = dependence_to_inverse_or_zero(a);
        CHECK(w1.kind == w2.kind);
        CHECK(!w1.b.is_zero());
        CHECK(!w2.b.is_zero());
        bool invertible = !determinant(a, Alg::berkowitz).is_zero();
        for (const InverseOrZero& w : {w1, w2}) {
          Matrix ab = a * w.b;
          if (w.kind == InverseOrZero::Kind::Inverse) {
            CHECK(invertible);
            CHECK(ab == Matrix::identity(F, n));
            CHECK(w.b * a == Matrix::identity(F, n));
          } else {
            CHECK(!invertible);
            CHECK(ab.is_zero());
          }
        }
      }
    }
  }

  TEST_CASE("steinitz exchange") {
    {
      Matrix t = Matrix::identity(Q, 2);
      Matrix e = mat(2, 1, {1, 1});
      SteinitzResult r = steinitz_exchange(t, e);
      REQUIRE(r.f.size() == 1);
      CHECK(r.f[0] == 1);
      CHECK(r.t_prime == mat(2, 2, {0, 1, 1, 1}));  // [e2 | e1+e2]
      CHECK(rank(r.t_prime) == 2);
    }
    {
      SteinitzResult r = steinitz_exchange(Matrix::identity(Q, 3), Matrix::identity(Q, 3));
      CHECK(r.f == std::vector<std::size_t>{1, 2, 3});
      CHECK(r.t_prime == Matrix::identity(Q, 3));
    }
    CHECK_THROWS_AS(steinitz_exchange(Matrix::identity(Q, 2), mat(2, 3, {1, 0, 1, 0, 1, 1})),
                    Error);
    CHECK_THROWS_AS(steinitz_exchange(mat(2, 2, {1, 2, 2, 4}), Matrix::identity(Q, 2)), Error);

    SplitMix64 rng(56);
    for (const Field& F : {Field::rationals(), Field::gf(5)}) {
      int done = 0;
      while (done < 25) {
        std::size_t n = 1 + rng.below(4);
        std::size_t m = n + rng.below(3);
        Matrix t = random_matrix(rng, F, n, m);
        if (rank(t) != n) continue;
        std::size_t k = 1 + rng.below(n);
        Matrix e = random_matrix(rng, F, n, k);
        if (rank(e) != k) continue;
        SteinitzResult r = steinitz_exchange(t, e);
        CHECK(r.f.size() == k);
        CHECK(rank(r.t_prime) == n);
        CHECK(r.t_prime.cols() == m);
        ++done;
      }
    }
  }

  TEST_CASE("powering via block inversion") {
    {
      Matrix a = mat(2, 2, {0, 1, 0, 0});
      auto ps = pow_via_inverse(a, 3);
      REQUIRE(ps.size() == 3);
      CHECK(ps[0] == Matrix::identity(Q, 2));
      CHECK(ps[1] == a);
      CHECK(ps[2].is_zero());
    }
    {
      auto ps = pow_via_inverse(mat(1, 1, {2}), 4);
      REQUIRE(ps.size() == 4);
      for (std::size_t i = 0; i < 4; ++i)
        CHECK(ps[i].entry(1, 1) == qi(1LL << i));
    }
    SplitMix64 rng(57);
    for (const Field& F : {Field::gf(5), Field::gf(2), Field::rationals()}) {
      for (int t = 0; t < 8; ++t) {
        std::size_t n = 1 + rng.below(3);
        std::size_t m = 1 + rng.below(4);
        Matrix a = random_matrix(rng, F, n, n);
        auto ps = pow_via_inverse(a, m);
        REQUIRE(ps.size() == m);
        for (std::size_t i = 0; i < m; ++i) CHECK(ps[i] == power(a, i));
      }
    }
  }

  TEST_CASE("companion matrices reproduce their polynomial") {
    SplitMix64 rng(58);
    for (int t = 0; t < 40; ++t) {
      std::size_t k = 1 + rng.below(6);
      Poly g = random_monic(rng, Q, k);
      Matrix a = companion(companion_spec_of(g));
      CHECK(berkowitz(a).poly == g);
      CHECK(csanky(a).poly == g);
    }
    Field F2 = Field::gf(2);
    for (int t = 0; t < 20; ++t) {
      std::size_t k = 1 + rng.below(6);
      Poly g = random_monic(rng, F2, k);
      CHECK(berkowitz(companion(companion_spec_of(g))).poly == g);
    }
  }
}
