#pragma once

// The Jacobi matrix of the relation ideal over A, its minors and rank, the
// index tuples carrying nonzero top minors, the critical column tuples one
// size up, the minor-generated ideal chain, the smoothness test, point
// reports at rational points, and the change-of-basis matrices between
// nonzero top minors in the localization.
//
// Index tuples are 0-based internally; str() prints 1-based, matching all
// report and JSON output.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diffop/matrix.hpp"
#include "diffop/quotient.hpp"

namespace diffop {

class IndexTuple {
 public:
  IndexTuple() = default;
  explicit IndexTuple(std::vector<int> indices);

  int size() const { return static_cast<int>(idx_.size()); }
  bool empty() const { return idx_.empty(); }
  int operator[](int pos) const { return idx_.at(static_cast<std::size_t>(pos)); }
  const std::vector<int>& indices() const { return idx_; }
  bool contains(int k) const;
  IndexTuple erased(int pos) const;

  friend bool operator==(const IndexTuple&, const IndexTuple&) = default;
  friend bool operator<(const IndexTuple& a, const IndexTuple& b) { return a.idx_ < b.idx_; }

  std::string str() const;

 private:
  std::vector<int> idx_;
};

// All strictly increasing k-subsets of {0,..,bound-1} in lexicographic order.
std::vector<IndexTuple> tuples_of_size(int k, int bound);

// Sorts v in place; returns -1 when an entry repeats, otherwise the parity
// (0 or 1) of the sorting permutation.
int sort_tuple_sign(std::vector<int>& v);

struct JacobiData {
  const CoordinateRing* ring;
  Matrix<Polynomial> matrix;  // reduced partials, generator rows by variable columns
  int r;
  std::vector<IndexTuple> rows_r;   // row tuples with some nonzero r-minor, lex order
  std::vector<IndexTuple> cols_r;   // column tuples likewise
  std::vector<IndexTuple> cols_r1;  // critical tuples: one deletion lands in cols_r
  IndexTuple pivot_rows;            // lex-smallest of rows_r
  IndexTuple pivot_cols;            // lex-smallest of cols_r
  mutable std::map<std::pair<IndexTuple, IndexTuple>, Polynomial> minor_cache;
};

struct JacobianIdeal {
  int k;
  std::vector<Polynomial> minors;  // the nonzero k-minors, reduced, in tuple order
  GroebnerBasis gb;                // of the lifted minors together with the relation ideal
};

struct PointReport {
  bool on_variety;
  bool singular;
  int tangent_dim;
};

// Fills the analysis cache on first use: matrix, rank, index sets, pivot.
const JacobiData& jacobi_data(const CoordinateRing& ring);

Residue jacobi_entry(const CoordinateRing& ring, int i, int j);
int rank(const CoordinateRing& ring);

// Minor over strictly increasing tuples of equal size; the empty pair gives 1.
Residue minor_det(const CoordinateRing& ring, const IndexTuple& i, const IndexTuple& j);

// Rows and columns in arbitrary order with repeats allowed: a repeat gives
// zero, otherwise the sorted minor times the sign of the sorting permutation.
Residue minor_general(const CoordinateRing& ring, std::vector<int> rows, std::vector<int> cols);

// Ideal generated by the k-minors, 0 <= k <= rank; k = 0 gives the unit ideal.
const JacobianIdeal& jacobian_ideal(const CoordinateRing& ring, int k);

// Jacobian criterion: the top minor ideal is the whole ring.
bool is_smooth(const CoordinateRing& ring);

// singular and tangent_dim are computed regardless of on_variety; they are
// meaningful (and reported) only on the variety.
PointReport point_report(const CoordinateRing& ring, const std::vector<Rational>& c);

// Checks minor(i2,j2)*minor(i,j) = minor(i2,j)*minor(i,j2); all four tuples
// must carry nonzero top minors.
bool verify_minor_identity(const CoordinateRing& ring, const IndexTuple& i,
                           const IndexTuple& i2, const IndexTuple& j, const IndexTuple& j2);

// H(j,j2) over the localization at minor(i,j): entry (v,u) is the minor with
// position v of j replaced by j2[u], divided by minor(i,j). Satisfies
// submatrix(i,j)*H(j,j2) = submatrix(i,j2) and H(j,j2)*H(j2,j) = identity.
Matrix<LocalizedElement> change_of_basis(const CoordinateRing& ring, const IndexTuple& i,
                                         const IndexTuple& j, const IndexTuple& j2);

}  // namespace diffop
