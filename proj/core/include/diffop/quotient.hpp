#pragma once

// The coordinate ring A = K[x_1..x_n]/(f_1..f_m) and its localization at a
// nonzero element: canonical residues via Groebner normal forms, exact
// arithmetic, and membership of localized elements back in A with an explicit
// witness.
//
// Construction validates that the relation ideal is proper and not maximal,
// and runs a randomized zero-divisor probe (fixed seed) as a sanity check of
// the primality assumption; a witness of zero divisors raises
// PreconditionError. The zero ideal is allowed, in which case A is the
// polynomial ring itself.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "diffop/error.hpp"
#include "diffop/groebner.hpp"
#include "diffop/polynomial.hpp"

namespace diffop {

class CoordinateRing;
struct JacobiData;
struct JacobianIdeal;
struct DerModuleData;

using RingPtr = std::shared_ptr<const CoordinateRing>;

class Residue {
 public:
  const RingPtr& ring() const { return ring_; }
  // Canonical representative: the normal form w.r.t. the ring's basis.
  const Polynomial& rep() const { return rep_; }

  bool is_zero() const { return rep_.is_zero(); }
  bool is_one() const;

  Residue operator-() const;
  Residue scaled(const Rational& c) const;
  Residue pow(unsigned e) const;

  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator*(const Residue& a, const Residue& b);
  Residue& operator+=(const Residue& b) { return *this = *this + b; }
  Residue& operator-=(const Residue& b) { return *this = *this - b; }
  Residue& operator*=(const Residue& b) { return *this = *this * b; }

  // Representatives are canonical, so equality is representative equality.
  friend bool operator==(const Residue& a, const Residue& b);
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  std::string str() const;

 private:
  friend class CoordinateRing;
  Residue(RingPtr ring, Polynomial rep) : ring_(std::move(ring)), rep_(std::move(rep)) {}

  RingPtr ring_;
  Polynomial rep_;
};

// numerator / delta^power with delta a fixed nonzero element of A. No
// normalization is attempted; equality is decided by cross-multiplication,
// which is valid because A is a domain. Arithmetic between elements over
// different deltas moves to the product denominator.
class LocalizedElement {
 public:
  LocalizedElement(Residue numerator, Residue delta, int power);
  static LocalizedElement in_ring(const Residue& a);

  const RingPtr& ring() const { return numerator_.ring(); }
  const Residue& numerator() const { return numerator_; }
  const Residue& delta() const { return delta_; }
  int power() const { return power_; }

  bool is_zero() const { return numerator_.is_zero(); }

  LocalizedElement operator-() const;
  LocalizedElement times(const Residue& a) const;
  friend LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b);
  friend LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b);

  // Mathematical equality in the localization, by cross-multiplication.
  friend bool operator==(const LocalizedElement& a, const LocalizedElement& b);
  friend bool operator!=(const LocalizedElement& a, const LocalizedElement& b) {
    return !(a == b);
  }

  // Decides numerator in (delta^power) + I. On success returns the witness w
  // with w * delta^power = numerator in A, re-checked by multiplication.
  std::optional<Residue> in_coordinate_ring() const;

  std::string str() const;

 private:
  Residue numerator_;
  Residue delta_;
  int power_;
};

class CoordinateRing : public std::enable_shared_from_this<CoordinateRing> {
 public:
  // Throws PreconditionError when the ideal is the unit ideal, when it is
  // zero-dimensional (maximal), or when the zero-divisor probe finds a
  // witness against primality. Generators are kept verbatim, in order; they
  // index the rows of the Jacobi matrix and the emitted relations.
  static RingPtr create(std::vector<std::string> variables,
                        std::vector<Polynomial> generators,
                        MonomialOrder order = MonomialOrder::kDegRevLex);
  static RingPtr create(std::vector<std::string> variables,
                        const std::vector<std::string>& generator_text,
                        MonomialOrder order = MonomialOrder::kDegRevLex);

  ~CoordinateRing();
  CoordinateRing(const CoordinateRing&) = delete;
  CoordinateRing& operator=(const CoordinateRing&) = delete;

  int nvars() const { return nvars_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  MonomialOrder order() const { return order_; }
  const GroebnerBasis& gb() const { return gb_; }
  int dimension() const { return dim_; }

  Residue project(const Polynomial& p) const;
  Residue project(const std::string& text) const;
  Residue zero() const;
  Residue one() const;
  Residue constant(const Rational& c) const;
  Residue variable(int k) const;

 private:
  CoordinateRing(std::vector<std::string> vars, std::vector<Polynomial> gens,
                 MonomialOrder order, GroebnerBasis gb, int dim);

  void zero_divisor_probe() const;

  std::vector<std::string> vars_;
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
  int nvars_;
  GroebnerBasis gb_;
  int dim_;

  // Lazy analysis caches, filled once and read-only afterwards. The payloads
  // live with the modules that compute them.
  mutable std::once_flag jacobi_once_;
  mutable std::unique_ptr<const JacobiData> jacobi_;
  mutable std::map<int, std::unique_ptr<const JacobianIdeal>> ideal_cache_;
  mutable std::once_flag dermod_once_;
  mutable std::unique_ptr<const DerModuleData> dermod_;

  friend const JacobiData& jacobi_data(const CoordinateRing& ring);
  friend const JacobianIdeal& jacobian_ideal(const CoordinateRing& ring, int k);
  friend const DerModuleData& der_module_data(const CoordinateRing& ring);
};

}  // namespace diffop
