// Exact field arithmetic: arbitrary-precision rationals (Q) and prime
// fields GF(p). Elements are kept in canonical form (reduced fraction
// with positive denominator, or residue in [0, p)), so operator== is
// semantic equality.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "exalg/error.hpp"

namespace exalg {

class Scalar;

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

class Field {
 public:
  static Field rationals();
  static Field gf(std::uint64_t p);  // NotPrime unless p is prime

  FieldKind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == FieldKind::Rationals; }
  std::uint64_t modulus() const noexcept { return p_; }
  // 0 for the rationals, p for GF(p)
  std::uint64_t characteristic() const noexcept { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long k) const;
  Scalar from_integer(const mpz_class& k) const;
  // Construction from raw payloads; both canonicalize. from_rational is
  // rejected on prime fields, from_residue on Q.
  Scalar from_rational(const mpq_class& q) const;
  Scalar from_residue(std::uint64_t r) const;

  std::string name() const;  // "Q" or "GF(p)"

  friend bool operator==(const Field& a, const Field& b) noexcept = default;

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

class Scalar {
 public:
  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  Scalar operator-() const;
  Scalar inv() const;  // DivisionByZero on 0

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;
  friend bool operator!=(const Scalar& a, const Scalar& b) noexcept;

  // Canonical literal: "num/den" (bare integer when den = 1) over Q,
  // decimal residue over GF(p). This is the CLI wire format.
  std::string str() const;

  const mpq_class& rational() const noexcept { return q_; }
  std::uint64_t residue() const noexcept { return r_; }

 private:
  friend class Field;
  Scalar(const Field& f, mpq_class q) : field_(f), q_(std::move(q)) {}
  Scalar(const Field& f, std::uint64_t r) : field_(f), r_(r) {}

  Field field_;
  mpq_class q_;            // Rationals payload
  std::uint64_t r_ = 0;    // PrimeField payload
};

}  // namespace exalg
