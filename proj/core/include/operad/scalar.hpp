#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace opd {

// Ground field of a computation: the rationals (characteristic 0) or a prime
// field F_p with p < 2^31.  A Field value is just the tag; it is carried by
// every Scalar so that mixed-field arithmetic can be rejected at runtime.
class Field {
public:
  Field() = default;  // rationals

  static Field rationals() { return Field(); }
  // Throws std::invalid_argument when p is not a prime below 2^31.
  static Field prime_field(std::uint32_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  bool operator==(const Field&) const = default;

  // "Q" or "Fp:<p>", matching the presentation-file syntax.
  std::string to_string() const;

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

// An exact field element.  Over Q the payload is an arbitrary-precision
// reduced fraction; over F_p it is the canonical residue in [0, p).
class Scalar {
public:
  Scalar() = default;  // zero over Q
  Scalar(const Field& f, long n);

  static Scalar zero(const Field& f) { return Scalar(f, 0); }
  static Scalar one(const Field& f) { return Scalar(f, 1); }
  // num/den as a field element; den must be invertible.
  static Scalar fraction(const Field& f, long num, long den);
  // Accepts an optionally signed integer "n" or fraction "n/d".
  static Scalar parse(const Field& f, const std::string& text);
  // Arbitrary-precision entry point; reduces mod p for prime fields.
  static Scalar from_mpq(const Field& f, const mpq_class& v);

  const Field& field() const { return f_; }
  bool is_zero() const;
  bool is_one() const;
  // True for negative rationals; always false over F_p (residues are
  // canonical).  Drives "+/-" placement when printing linear combinations.
  bool is_negative() const;
  Scalar abs() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws std::domain_error on /0
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "5", "-3/2" over Q; the canonical residue over F_p.
  std::string to_string() const;

  // Exposed for serialization: numerator/denominator over Q (denominator 1
  // for F_p residues).
  mpz_class numerator() const;
  mpz_class denominator() const;

private:
  void require_same_field(const Scalar& o) const;

  Field f_;
  long r_ = 0;   // F_p payload
  mpq_class q_;  // Q payload
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace opd
