#pragma once

// Groebner bases for ideals of the polynomial ring.
//
// Buchberger's algorithm with the coprime-lcm and chain criteria, reduced
// (hence canonical) bases, full normal forms, ideal equality, and the Krull
// dimension of the quotient via independent variable subsets of the
// leading-term ideal.

#include <optional>
#include <vector>

#include "diffop/polynomial.hpp"

namespace diffop {

class GroebnerBasis {
 public:
  int nvars() const { return nvars_; }
  MonomialOrder order() const { return order_; }
  // Monic, fully interreduced, sorted descending by leading monomial.
  // Empty for the zero ideal.
  const std::vector<Polynomial>& elements() const { return elements_; }
  bool is_unit() const {
    return elements_.size() == 1 && elements_[0].is_constant() && !elements_[0].is_zero();
  }
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  friend GroebnerBasis buchberger(std::vector<Polynomial>, int, MonomialOrder);
  GroebnerBasis(int nvars, MonomialOrder order, std::vector<Polynomial> elements)
      : nvars_(nvars), order_(order), elements_(std::move(elements)) {}
  int nvars_;
  MonomialOrder order_;
  std::vector<Polynomial> elements_;
};

// Zero generators are dropped; an empty set yields the zero ideal. The
// reduced basis is canonical: any generating set of the same ideal under the
// same order produces an identical basis.
GroebnerBasis buchberger(std::vector<Polynomial> gens, int nvars, MonomialOrder order);
GroebnerBasis buchberger(std::vector<Polynomial> gens);  // pre: gens non-empty

// Remainder of full division by the basis; the unique normal form.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb);

// Same ring and order required (throws otherwise); reduced bases are
// canonical so equality is structural.
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b);

// Krull dimension of the quotient by the ideal: the largest number of
// variables no leading monomial of the basis is supported on. Returns -1
// for the unit ideal, nvars for the zero ideal.
int krull_dimension(const GroebnerBasis& gb);

// Decides p ∈ (special) + (others) and, when it holds, returns w with
// p - w*special in (others). The coefficient of special is tracked through
// basis construction and division.
std::optional<Polynomial> cofactor_membership(const Polynomial& p,
                                              const Polynomial& special,
                                              const std::vector<Polynomial>& others);

}  // namespace diffop
