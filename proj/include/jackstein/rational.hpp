#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jackstein {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin value wrapper around GMP's mpq_class; every
// constructor canonicalizes, so equality and ordering are exact.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(long long n) { set_ll(n); }
  Rational(long num, long den) : v_(static_cast<signed long>(num), static_cast<signed long>(den)) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  // Accepts "p/q", "p", optional sign, arbitrary precision.
  static std::optional<Rational> parse(std::string_view text);

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  Rational operator-() const { Rational r; r.v_ = -v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { Rational r; r.v_ = ::abs(v_); return r; }
  Rational pow(unsigned e) const;
  Rational inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

  double to_double() const { return v_.get_d(); }
  // "p/q" when q != 1, otherwise "p".
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }

 private:
  void set_ll(long long n);
  mpq_class v_;
};

// n! as an exact integer-valued rational.
Rational factorial(int n);
// C(n, 2) as a rational.
inline Rational choose2(int n) { return Rational(static_cast<long long>(n) * (n - 1) / 2); }

}  // namespace jackstein
