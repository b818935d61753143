#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "equifreq/errors.hpp"

namespace equifreq {

// Arbitrary-precision integer. Every level, multiplier and conic component in
// this library is an Int; nothing is allowed to wrap around silently.
using Int = mpz_class;

inline Int gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw DomainError(Reason::GcdOfZeros);
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int m;
  mpz_lcm(m.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return m;
}

inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Normalized fraction: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
/// Canonicalized eagerly on construction, so equality is structural and the
/// fields can be used directly as grouping keys.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int value) : num_(std::move(value)), den_(1) {}
  Rational(long value) : num_(value), den_(1) {}
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { canonicalize_(); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_positive() const { return num_ > 0; }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw DomainError(Reason::ZeroDenominator, "division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string str() const {
    std::string s = num_.get_str();
    if (den_ != 1) s += "/" + den_.get_str();
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  struct raw_tag {};
  Rational(Int num, Int den, raw_tag) : num_(std::move(num)), den_(std::move(den)) {}

  void canonicalize_() {
    if (den_ == 0) throw DomainError(Reason::ZeroDenominator);
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    num_ /= g;
    den_ /= g;
  }

  Int num_;
  Int den_; // always > 0
};

inline Rational normalize(Int num, Int den) { return Rational(std::move(num), std::move(den)); }

} // namespace equifreq
