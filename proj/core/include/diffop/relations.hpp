#pragma once

#include <string>
#include <vector>

#include "diffop/operators.hpp"

namespace diffop {

// Constant appearing when a derivation symbol is moved past a variable:
// d_{i,j} x_k = x_k d_{i,j} + value of the derivation on x_k. Zero whenever k
// is outside the column tuple.
Residue straightening_constant(const CoordinateRing& ring, const IndexTuple& i,
                               const IndexTuple& j, int k);

struct RelationTerm {
  int sign;               // +1 or -1, after sorting the target columns
  Residue minor;          // deleted minor of the left-hand symbol
  IndexTuple target_cols;
};

// One rewriting relation: lhs_minor * d_{iprime,jprime} equals the signed sum
// of minor-weighted symbols d_{i, j + c} over the columns c of jprime outside
// j.
struct Relation {
  IndexTuple i;
  IndexTuple iprime;
  IndexTuple j;
  IndexTuple jprime;
  Residue lhs_minor;
  std::vector<RelationTerm> terms;
};

// All instances, ordered lexicographically by (i, iprime, j, jprime).
std::vector<Relation> relation_instances(const CoordinateRing& ring);

// Checks one relation on coefficient vectors of the underlying derivations.
bool verify_relation(const CoordinateRing& ring, const Relation& rel);

OperatorExpr relation_lhs(const CoordinateRing& ring, const Relation& rel);
OperatorExpr relation_rhs(const CoordinateRing& ring, const Relation& rel);

struct DSymbol {
  IndexTuple rows;
  IndexTuple cols;
};

struct Rd2Entry {
  IndexTuple rows;
  IndexTuple cols;
  int k;
  Residue constant;
};

struct PresentationDoc {
  RingPtr ring;
  std::vector<std::string> variables;
  std::vector<Polynomial> rd1;  // the defining polynomials, verbatim
  std::vector<DSymbol> d_symbols;
  std::vector<Rd2Entry> rd2;
  std::vector<Relation> rd3;
};

PresentationDoc presentation(const CoordinateRing& ring);

struct PresentationReport {
  bool rd1_ok = true;
  bool rd2_ok = true;
  bool rd3_ok = true;
  std::vector<std::string> failures;
  bool all_ok() const { return rd1_ok && rd2_ok && rd3_ok; }
};

// Re-derives every relation from the operator actions: the defining
// polynomials act as zero, the straightening constants match commutators at
// order 1, and both sides of each rewriting relation agree at order 1.
PresentationReport verify_presentation(const CoordinateRing& ring);

// Candidate element of the order filtration, written in the localized
// derivations D_1..D_q attached to the pivot minor: coeff * D^alpha where
// alpha runs over the complement columns of the pivot in increasing order.
struct FiltrationTerm {
  LocalizedElement coeff;
  std::vector<int> alpha;
};

// Whether the candidate operator maps the coordinate ring into itself when
// applied to every monomial of degree at most bound, which decides membership
// in the operators of order <= bound. Callers should keep bound small: cost
// grows with the monomial count.
bool order_membership(const CoordinateRing& ring, const IndexTuple& i,
                      const IndexTuple& j,
                      const std::vector<FiltrationTerm>& candidate, int bound);

}  // namespace diffop
