#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ordalab {

/// Exact rational scalar used for every coordinate in the library.
/// Wraps GMP's mpq_class and keeps the canonical form invariant
/// (denominator > 0, gcd(|num|, den) = 1).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}    // NOLINT: implicit by design
  Rational(long n) : v_(n) {}   // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Parses "p/q" or "p" with optional sign. Throws std::invalid_argument.
  static Rational parse(const std::string& text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// Canonical "p/q" (or "p" when the denominator is 1).
  std::string str() const;
  double approx() const { return v_.get_d(); }

  /// Largest integer <= this.
  mpz_class floor() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / Rational(2); }

}  // namespace ordalab
