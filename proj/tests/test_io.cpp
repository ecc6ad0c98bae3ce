#include <doctest.h>

#include "exalg/io.hpp"
#include "exalg/rng.hpp"
#include "exalg/verify.hpp"

using namespace exalg;

namespace {
const Field Q = Field::rationals();
}

TEST_SUITE("io") {
  TEST_CASE("field literals") {
    CHECK(parse_field("q") == Field::rationals());
    CHECK(parse_field("Q") == Field::rationals());
    CHECK(parse_field("gf:7") == Field::gf(7));
    CHECK(parse_field("GF(7)") == Field::gf(7));
    CHECK_THROWS_AS(parse_field("gf:6"), Error);   // not prime
    CHECK_THROWS_AS(parse_field("real"), Error);
  }

  TEST_CASE("scalar literals") {
    CHECK(parse_scalar(Q, "5") == Q.from_integer(5));
    CHECK(parse_scalar(Q, "-3") == Q.from_integer(-3));
    CHECK(parse_scalar(Q, "1/2") == Q.from_rational(mpq_class(1, 2)));
    CHECK(parse_scalar(Q, "-6/4") == Q.from_rational(mpq_class(-3, 2)));
    CHECK(parse_scalar(Field::gf(7), "12") == Field::gf(7).from_residue(5));
    CHECK(parse_scalar(Field::gf(7), "-3") == Field::gf(7).from_residue(4));
    CHECK_THROWS_AS(parse_scalar(Q, "1/0"), Error);
    CHECK_THROWS_AS(parse_scalar(Q, "x"), Error);
    CHECK_THROWS_AS(parse_scalar(Field::gf(5), "1/2"), Error);
  }

  TEST_CASE("plain matrix format") {
    Matrix i2 = parse_matrix(Q, "2 2\n1 0\n0 1", Format::plain);
    CHECK(i2 == Matrix::identity(Q, 2));
    Matrix row = parse_matrix(Q, "1 2\n1/2 -3", Format::plain);
    CHECK(row.entry(1, 1) == Q.from_rational(mpq_class(1, 2)));
    CHECK(row.entry(1, 2) == Q.from_integer(-3));
    CHECK_THROWS_AS(parse_matrix(Q, "2 2\n1 0\n0", Format::plain), Error);  // short row
    CHECK_THROWS_AS(parse_matrix(Q, "2 2\n1 0", Format::plain), Error);     // missing row
    CHECK_THROWS_AS(parse_matrix(Q, "0 2\n", Format::plain), Error);
    CHECK_THROWS_AS(parse_matrix(Q, "2 2\n1 0\n0 1\n7", Format::plain), Error);  // trailing
  }

  TEST_CASE("json matrix format") {
    std::string text = R"({"field":"Q","rows":2,"cols":2,"entries":[["1","1/2"],["0","-3"]]})";
    Matrix a = parse_matrix(Q, text, Format::json);
    CHECK(a.entry(1, 2) == Q.from_rational(mpq_class(1, 2)));
    CHECK(a.entry(2, 2) == Q.from_integer(-3));
    // integer cells are accepted on parse
    Matrix b = parse_matrix(Field::gf(5),
                            R"js({"field":"GF(5)","rows":1,"cols":2,"entries":[[3,9]]})js",
                            Format::json);
    CHECK(b.entry(1, 2) == Field::gf(5).from_residue(4));
    CHECK_THROWS_AS(parse_matrix(Q, R"({"rows":1})", Format::json), Error);
    CHECK_THROWS_AS(parse_matrix(Q, "{", Format::json), Error);
    // embedded field must match the requested one
    CHECK_THROWS_AS(parse_matrix(Field::gf(5), text, Format::json), Error);
  }

  TEST_CASE("round trips on random matrices") {
    SplitMix64 rng(61);
    for (const Field& F : {Field::rationals(), Field::gf(7)}) {
      for (int t = 0; t < 50; ++t) {
        std::size_t m = 1 + rng.below(5), n = 1 + rng.below(5);
        Matrix a = random_matrix(rng, F, m, n);
        CHECK(parse_matrix(F, serialize(a, Format::plain), Format::plain) == a);
        CHECK(parse_matrix(F, serialize(a, Format::json), Format::json) == a);
      }
    }
  }

  TEST_CASE("several matrices in one plain stream") {
    auto ms = parse_matrices(Q, "2 2\n1 0\n0 1\n\n2 1\n4\n5\n", Format::plain);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0] == Matrix::identity(Q, 2));
    CHECK(ms[1].entry(2, 1) == Q.from_integer(5));
    CHECK_THROWS_AS(parse_matrices(Q, "  \n", Format::plain), Error);
  }

  TEST_CASE("several matrices as a json array") {
    std::string one = R"({"field":"Q","rows":1,"cols":1,"entries":[["3"]]})";
    auto ms = parse_matrices(Q, "[" + one + "," + one + "]", Format::json);
    REQUIRE(ms.size() == 2);
    CHECK(ms[1].entry(1, 1) == Q.from_integer(3));
    auto single = parse_matrices(Q, one, Format::json);
    CHECK(single.size() == 1);
    CHECK_THROWS_AS(parse_matrices(Q, "7", Format::json), Error);
  }

  TEST_CASE("polynomial serialization") {
    Poly p = Poly::from_coeffs(Q, {Q.from_integer(6), Q.from_integer(-5), Q.one()});
    CHECK(serialize(p) == "[6, -5, 1]");
    CHECK(serialize(Poly(Q)) == "[]");
    Poly h = Poly::from_coeffs(Q, {Q.from_rational(mpq_class(1, 2)), Q.one()});
    CHECK(serialize(h) == "[1/2, 1]");
  }
}
