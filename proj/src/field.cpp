#include "exalg/field.hpp"

#include "exalg/stats.hpp"

namespace exalg {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0 || p % 3 == 0) return false;
  for (std::uint64_t i = 5; i <= p / i; i += 6) {
    if (p % i == 0 || p % (i + 2) == 0) return false;
  }
  return true;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a + b;  // wraparound-safe: if it wrapped, r < a
  if (r < a || r >= p) r -= p;
  return r;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t r = a - b;
  if (a < b) r += p;
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

// Extended Euclid; a must be in [1, p).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, newt = 1;
  std::uint64_t r = p, newr = a;
  while (newr != 0) {
    std::uint64_t q = r / newr;
    __int128 tmp = t - static_cast<__int128>(q) * newt;
    t = newt;
    newt = tmp;
    std::uint64_t rr = r - q * newr;
    r = newr;
    newr = rr;
  }
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Field Field::gf(std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::NotPrime, "GF modulus " + std::to_string(p) + " is not prime");
  return Field(FieldKind::PrimeField, p);
}

Scalar Field::zero() const {
  if (is_rationals()) return Scalar(*this, mpq_class(0));
  return Scalar(*this, std::uint64_t{0});
}

Scalar Field::one() const {
  if (is_rationals()) return Scalar(*this, mpq_class(1));
  return Scalar(*this, std::uint64_t{1});
}

Scalar Field::from_integer(long long k) const {
  return from_integer(mpz_class(static_cast<long>(k)));
}

Scalar Field::from_integer(const mpz_class& k) const {
  if (is_rationals()) return Scalar(*this, mpq_class(k));
  mpz_class m = k % static_cast<unsigned long>(p_);
  if (m < 0) m += static_cast<unsigned long>(p_);
  return Scalar(*this, static_cast<std::uint64_t>(m.get_ui()));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (!is_rationals()) fail(Errc::FieldMismatch, "rational literal over " + name());
  mpq_class c = q;
  c.canonicalize();
  return Scalar(*this, std::move(c));
}

Scalar Field::from_residue(std::uint64_t r) const {
  if (is_rationals()) fail(Errc::FieldMismatch, "residue literal over Q");
  return Scalar(*this, r % p_);
}

std::string Field::name() const {
  return is_rationals() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

bool Scalar::is_zero() const noexcept {
  return field_.is_rationals() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const noexcept {
  return field_.is_rationals() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, mpq_class(-q_));
  return Scalar(field_, r_ == 0 ? 0 : field_.modulus() - r_);
}

Scalar Scalar::inv() const {
  stats::scalar_invs.fetch_add(1, std::memory_order_relaxed);
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of 0 in " + field_.name());
  if (field_.is_rationals()) {
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Scalar(field_, std::move(r));
  }
  return Scalar(field_, inv_mod(r_, field_.modulus()));
}

static void check_same_field(const Scalar& a, const Scalar& b) {
  if (!(a.field() == b.field()))
    fail(Errc::FieldMismatch, a.field().name() + " vs " + b.field().name());
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (a.field_.is_rationals()) return Scalar(a.field_, mpq_class(a.q_ + b.q_));
  return Scalar(a.field_, add_mod(a.r_, b.r_, a.field_.modulus()));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  if (a.field_.is_rationals()) return Scalar(a.field_, mpq_class(a.q_ - b.q_));
  return Scalar(a.field_, sub_mod(a.r_, b.r_, a.field_.modulus()));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  stats::scalar_muls.fetch_add(1, std::memory_order_relaxed);
  if (a.field_.is_rationals()) return Scalar(a.field_, mpq_class(a.q_ * b.q_));
  return Scalar(a.field_, mul_mod(a.r_, b.r_, a.field_.modulus()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rationals() ? a.q_ == b.q_ : a.r_ == b.r_;
}

bool operator!=(const Scalar& a, const Scalar& b) noexcept { return !(a == b); }

std::string Scalar::str() const {
  if (field_.is_rationals()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace exalg
