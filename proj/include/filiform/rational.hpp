#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace filiform {

/// Exact rational scalar, the coefficient field for every computation.
///
/// Values are kept canonical at all times: denominator > 0,
/// gcd(|numerator|, denominator) = 1, and zero is stored as 0/1.
/// Backed by GMP, so numerators and denominators are arbitrary precision.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit integers are intended
  Rational(long num, long den);
  explicit Rational(mpq_class q);
  Rational(mpz_class num, mpz_class den);

  /// Parses "p" or "p/q" with an optional leading minus on p.
  /// Throws std::invalid_argument on malformed text or q = 0.
  static Rational from_string(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  /// Integer power; e may be negative (then the value must be nonzero).
  Rational pow(long e) const;

  /// Exact rational g-th root, if one exists: the positive root for even g,
  /// the unique real root for odd g. g = 0 is a domain error.
  std::optional<Rational> nth_root(unsigned g) const;

  /// "p/q" in lowest terms, "p" when q = 1, sign on the numerator.
  std::string str() const;

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned long n, unsigned long k);

/// n! as an exact rational.
Rational factorial(unsigned long n);

}  // namespace filiform
