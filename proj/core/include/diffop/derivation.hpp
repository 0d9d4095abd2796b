#pragma once

// Derivations of the coordinate ring as coefficient vectors against the
// partial derivatives, the natural derivations built from signed deleted
// minors, the submodule they generate, reconstruction of a derivation from
// its values on the complement variables of a pivot, and the level-s variants
// with coefficients reduced modulo the next minor ideal.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diffop/free_module.hpp"
#include "diffop/jacobi.hpp"
#include "diffop/quotient.hpp"

namespace diffop {

class Derivation {
 public:
  Derivation(RingPtr ring, std::vector<Residue> coefficients);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Residue>& coefficients() const { return coeffs_; }
  bool is_zero() const;

  Residue apply(const Residue& a) const;

  Derivation operator-() const;
  Derivation times(const Residue& a) const;
  Derivation scaled(const Rational& c) const;
  friend Derivation operator+(const Derivation& a, const Derivation& b);
  friend Derivation operator-(const Derivation& a, const Derivation& b);
  Derivation& operator+=(const Derivation& b) { return *this = *this + b; }
  Derivation& operator-=(const Derivation& b) { return *this = *this - b; }
  friend bool operator==(const Derivation& a, const Derivation& b);
  friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Residue> coeffs_;
};

struct NaturalGenerator {
  IndexTuple rows;
  IndexTuple cols;
  Derivation derivation;
};

struct DerModuleData {
  struct Gen {
    IndexTuple rows;
    IndexTuple cols;
    std::vector<Polynomial> coeffs;
  };
  std::vector<Gen> generators;  // lex over (rows, cols), only the nonzero pairs matter
  ModuleBasis submodule;        // lifted coefficient vectors plus relation multiples of
                                // the unit vectors
};

const DerModuleData& der_module_data(const CoordinateRing& ring);

// rows of size rank, cols of size rank+1; coefficient of the cols[k] slot is
// the deleted minor with alternating sign. Nonzero exactly when both tuples
// carry nonzero top minors after deletion.
Derivation natural_derivation(const CoordinateRing& ring, const IndexTuple& i,
                              const IndexTuple& j);

// Columns in arbitrary order with repeats allowed: repeats give the zero
// derivation, otherwise the sorted-tuple derivation times the sorting sign.
Derivation natural_derivation_listed(const CoordinateRing& ring, const IndexTuple& i,
                                     std::vector<int> cols);

std::vector<NaturalGenerator> natural_generators(const CoordinateRing& ring);

// Whether the coefficient vector annihilates every relation: the matrix of
// reduced partials applied to it vanishes in every row.
bool is_derivation(const CoordinateRing& ring, const std::vector<Residue>& coeffs);

// Membership in the submodule generated by the natural derivations, decided
// over the polynomial ring on lifted vectors. Throws when d is not a
// derivation.
bool in_natural_submodule(const Derivation& d);

struct ReconstructResult {
  std::optional<Derivation> derivation;
  // on failure: the position in the pivot columns whose coefficient left the
  // ring, and that coefficient
  int failed_position = -1;
  std::optional<LocalizedElement> failed_element;
};

// Extends prescribed values on the complement variables of pivot (i, j) to a
// derivation when the induced pivot-column coefficients lie in the ring.
// values is keyed by 0-based variable index and must cover exactly the
// complement of j.
ReconstructResult reconstruct(const CoordinateRing& ring, const IndexTuple& i,
                              const IndexTuple& j, const std::map<int, Residue>& values);

struct HigherDerivation {
  RingPtr ring;
  int s;
  IndexTuple rows;
  IndexTuple cols;
  std::vector<Polynomial> coeffs;  // reduced modulo the level ideal
  GroebnerBasis modulus;           // relations plus the lifted (s+1)-minor ideal
};

bool same_level_class(const HigherDerivation& a, const HigherDerivation& b);

// rows of size s, cols of size s+1, 1 <= s <= rank; coefficients are the
// signed deleted s-minors reduced modulo relations plus (s+1)-minors.
HigherDerivation higher_natural_derivation(const CoordinateRing& ring, int s,
                                           const IndexTuple& i, const IndexTuple& j);

// Ideal generated by the values of all natural generators on the variables,
// together with the relations.
GroebnerBasis image_ideal(const CoordinateRing& ring);

}  // namespace diffop
