#include "bvkit/field.hpp"

#include <ostream>

#include "bvkit/error.hpp"

namespace bvkit {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
    b = static_cast<std::int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (!is_prime(p)) throw InvalidInput("field modulus " + std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31)) throw InvalidInput("field modulus too large");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s;
  s.field_ = *this;
  if (p_ == 0)
    s.q_ = mpq_class(static_cast<long>(v));
  else
    s.r_ = mod(v, p_);
  return s;
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DivisionByZero();
  return from_int(num) / from_int(den);
}

Scalar Field::parse(const std::string& text) const {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw InvalidInput("cannot parse scalar '" + text + "'");
  if (q.get_den() == 0) throw DivisionByZero();
  q.canonicalize();
  if (p_ == 0) {
    Scalar s;
    s.field_ = *this;
    s.q_ = q;
    return s;
  }
  mpz_class pz(static_cast<long>(p_));
  mpz_class n = q.get_num() % pz;
  mpz_class d = q.get_den() % pz;
  if (n < 0) n += pz;
  if (d == 0) throw DivisionByZero();
  return from_int(n.get_si()) / from_int(d.get_si());
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_)) throw FieldMismatch();
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (field_.is_rational())
    q_ -= o.q_;
  else
    r_ = mod(r_ - o.r_, field_.characteristic());
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar s = *this;
  if (field_.is_rational())
    s.q_ = 1 / q_;
  else
    s.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check(b);
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::size_t Scalar::height() const {
  if (!field_.is_rational()) return 1;
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace bvkit
