#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>

namespace bvkit {

class Scalar;

// Either the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::int64_t p);

  bool is_rational() const { return p_ == 0; }
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;
  // Accepts "3", "-3/4"; over F_p the fraction is reduced mod p.
  Scalar parse(const std::string& text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_ = 0;
};

bool is_prime(std::int64_t n);

// An exact field element tagged with its field. Combining elements of
// different fields throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Representative in [0,p) over F_p; meaningless over Q.
  std::int64_t residue() const { return r_; }
  const mpq_class& rational() const { return q_; }
  // Bit size of numerator plus denominator; used to pick small pivots.
  std::size_t height() const;

  std::string to_string() const;

 private:
  friend class Field;
  void check(const Scalar& o) const;

  Field field_;
  mpq_class q_;
  std::int64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bvkit
