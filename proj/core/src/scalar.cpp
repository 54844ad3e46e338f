#include "operad/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace opd {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

long mod_reduce(long n, std::uint32_t p) {
  long r = n % static_cast<long>(p);
  if (r < 0) r += static_cast<long>(p);
  return r;
}

// Inverse of a mod p via extended Euclid; a must be nonzero mod p.
long mod_inverse(long a, std::uint32_t p) {
  long t = 0, new_t = 1;
  long r = static_cast<long>(p), new_r = a;
  while (new_r != 0) {
    long q = r / new_r;
    long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("division by zero in F_p");
  return t < 0 ? t + static_cast<long>(p) : t;
}

}  // namespace

Field Field::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p)) {
    throw std::invalid_argument("field characteristic must be a prime below 2^31");
  }
  return Field(p);
}

std::string Field::to_string() const {
  return is_rationals() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& f, long n) : f_(f) {
  if (f_.is_rationals()) {
    q_ = n;
  } else {
    r_ = mod_reduce(n, f_.characteristic());
  }
}

Scalar Scalar::fraction(const Field& f, long num, long den) {
  if (den == 0) throw std::domain_error("fraction with zero denominator");
  if (f.is_rationals()) {
    Scalar s(f, 0);
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    return s;
  }
  return Scalar(f, num) / Scalar(f, den);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad coefficient literal: " + text);
  }
  if (v.get_den() == 0) throw std::invalid_argument("bad coefficient literal: " + text);
  v.canonicalize();
  return from_mpq(f, v);
}

Scalar Scalar::from_mpq(const Field& f, const mpq_class& v) {
  Scalar s(f, 0);
  if (f.is_rationals()) {
    s.q_ = v;
    s.q_.canonicalize();
    return s;
  }
  const mpz_class p(static_cast<unsigned long>(f.characteristic()));
  mpz_class num = v.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = v.get_den() % p;
  const Scalar d(f, den.get_si());
  if (d.is_zero()) throw std::domain_error("denominator not invertible mod p");
  return Scalar(f, mpz_class(num).get_si()) / d;
}

bool Scalar::is_zero() const {
  return f_.is_rationals() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return f_.is_rationals() ? q_ == 1 : r_ == 1;
}

bool Scalar::is_negative() const {
  return f_.is_rationals() && q_ < 0;
}

Scalar Scalar::abs() const {
  return is_negative() ? -*this : *this;
}

void Scalar::require_same_field(const Scalar& o) const {
  if (!(f_ == o.f_)) throw std::logic_error("mixed-field scalar arithmetic");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (f_.is_rationals()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = static_cast<long>(f_.characteristic()) - r_;
  }
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (f_.is_rationals()) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = mod_reduce(r_ + o.r_, f_.characteristic());
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  Scalar s = *this;
  if (f_.is_rationals()) {
    s.q_ = q_ * o.q_;
  } else {
    s.r_ = mod_reduce(r_ * o.r_, f_.characteristic());
  }
  return s;
}

Scalar Scalar::inverse() const {
  Scalar s = *this;
  if (f_.is_rationals()) {
    if (q_ == 0) throw std::domain_error("division by zero");
    s.q_ = 1 / q_;
  } else {
    s.r_ = mod_inverse(r_, f_.characteristic());
  }
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  return f_ == o.f_ && (f_.is_rationals() ? q_ == o.q_ : r_ == o.r_);
}

std::string Scalar::to_string() const {
  if (f_.is_rationals()) return q_.get_str();
  return std::to_string(r_);
}

mpz_class Scalar::numerator() const {
  return f_.is_rationals() ? q_.get_num() : mpz_class(r_);
}

mpz_class Scalar::denominator() const {
  return f_.is_rationals() ? q_.get_den() : mpz_class(1);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace opd
