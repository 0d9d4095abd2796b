#pragma once

// Exact rational numbers.
//
// Thin value wrapper around GMP's mpq_class. Every value is kept in reduced
// form with a positive denominator; zero is 0/1. Division by zero throws.

#include <gmpxx.h>

#include <string>
#include <utility>

#include "diffop/error.hpp"

namespace diffop {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Accepts "n" or "n/d" with an optional leading minus, nothing else.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  // "n" for integers, "n/d" otherwise.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  Rational reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    return Rational(mpq_class(1 / v_));
  }

  Rational pow(unsigned e) const {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return Rational(std::move(r));  // gcd(n,d)=1 implies gcd(n^e,d^e)=1
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational Rational::from_string(const std::string& s) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t k = from;
    while (k < s.size() && s[k] >= '0' && s[k] <= '9') ++k;
    return k;
  };
  if (i < s.size() && s[i] == '-') ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw Error("bad rational literal: " + s);
  if (num_end == s.size()) {
    Rational r;
    r.v_ = mpq_class(s.substr(0, num_end));
    return r;
  }
  if (s[num_end] != '/') throw Error("bad rational literal: " + s);
  std::size_t den_end = digits(num_end + 1);
  if (den_end == num_end + 1 || den_end != s.size())
    throw Error("bad rational literal: " + s);
  mpz_class num(s.substr(0, num_end));
  mpz_class den(s.substr(num_end + 1));
  if (den == 0) throw Error("rational with zero denominator: " + s);
  Rational r;
  r.v_ = mpq_class(num, den);
  r.v_.canonicalize();
  return r;
}

}  // namespace diffop
