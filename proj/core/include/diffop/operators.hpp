#pragma once

#include <string>
#include <variant>
#include <vector>

#include "diffop/derivation.hpp"
#include "diffop/jacobi.hpp"
#include "diffop/quotient.hpp"

namespace diffop {

// Multiplication by a fixed ring element.
struct MulAtom {
  Residue value;
};

// One of the distinguished derivation symbols, identified by its row tuple
// (size r) and column tuple (size r+1).
struct GenAtom {
  IndexTuple rows;
  IndexTuple cols;
};

using Atom = std::variant<MulAtom, GenAtom>;

// A word of atoms with a rational coefficient. The rightmost atom acts first.
struct OpTerm {
  Rational coeff;
  std::vector<Atom> word;
};

// Formal sum of operator words. Products concatenate words, so no rewriting
// ever happens here; equality of the operators they denote is decided by
// acting on monomials (operators_equal_up_to_order below).
class OperatorExpr {
 public:
  OperatorExpr(RingPtr ring, std::vector<OpTerm> terms);

  static OperatorExpr zero(RingPtr ring);
  static OperatorExpr identity(RingPtr ring);
  static OperatorExpr multiplication(const Residue& value);
  static OperatorExpr generator(RingPtr ring, IndexTuple rows, IndexTuple cols);

  const RingPtr& ring() const { return ring_; }
  const std::vector<OpTerm>& terms() const { return terms_; }

  // Largest number of derivation atoms in any single word.
  int order_bound() const;

  OperatorExpr scaled(const Rational& c) const;
  OperatorExpr pow(unsigned e) const;
  OperatorExpr operator-() const;

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);

  Residue apply(const Residue& a) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<OpTerm> terms_;
};

// Decides whether two expressions act identically on every monomial of total
// degree at most bound. Throws if either expression has order_bound() > bound,
// since the test would then be inconclusive.
bool operators_equal_up_to_order(const OperatorExpr& a, const OperatorExpr& b,
                                 int bound);

// Parses an operator word. The grammar extends polynomial syntax with
// derivation atoms d[i1,...;j1,...] carrying 1-based indices; the row list may
// be empty when the rank is zero. Index lists are normalized by sorting (with
// the sign of the permutation); a repeated index yields the zero operator.
OperatorExpr parse_operator(const std::string& text, const RingPtr& ring);

}  // namespace diffop
