#pragma once

// Sparse multivariate polynomials over the rationals.
//
// A polynomial carries its variable count and term order. Terms are kept
// strictly descending under that order with no zero coefficients, so equal
// polynomials always have identical term lists. Mixing polynomials with
// different variable counts or orders throws.

#include <vector>

#include "diffop/error.hpp"
#include "diffop/monomial.hpp"
#include "diffop/rational.hpp"

namespace diffop {

struct Term {
  Monomial mon;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  // Zero polynomial in zero variables; a placeholder only.
  Polynomial() = default;

  Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  static Polynomial constant(int nvars, MonomialOrder order, Rational c);
  static Polynomial variable(int nvars, MonomialOrder order, int k);
  // Normalizes: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(int nvars, MonomialOrder order, std::vector<Term> terms);

  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one()); }
  const Term& lead() const;       // throws on zero
  int total_degree() const;       // -1 for zero
  Rational constant_coeff() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const;
  // this * c * m
  Polynomial times_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned e) const;

  // Partial derivative with respect to variable k.
  Polynomial partial(int k) const;

  Rational evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void normalize();
  int nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::kDegRevLex;
  std::vector<Term> terms_;
};

}  // namespace diffop
