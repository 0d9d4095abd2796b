#pragma once

// Submodules of the free module P^s over the polynomial ring.
//
// Buchberger's algorithm under a position-over-term order (lower component
// index dominates; ties broken by the scalar term order), reduced bases,
// and membership by reduction to zero. S-vectors exist only for elements
// sharing a leading position; the coprime-lead shortcut is not valid for
// modules, so only the chain criterion is applied.

#include <vector>

#include "diffop/polynomial.hpp"

namespace diffop {

// Length-s vector of polynomials over a common ring.
using VectorPoly = std::vector<Polynomial>;

class ModuleBasis {
 public:
  int nvars() const { return nvars_; }
  int components() const { return ncomps_; }
  MonomialOrder order() const { return order_; }
  const std::vector<VectorPoly>& elements() const { return elements_; }

 private:
  friend ModuleBasis module_buchberger(std::vector<VectorPoly>, int, int, MonomialOrder);
  ModuleBasis(int nvars, int ncomps, MonomialOrder order, std::vector<VectorPoly> elements)
      : nvars_(nvars), ncomps_(ncomps), order_(order), elements_(std::move(elements)) {}
  int nvars_;
  int ncomps_;
  MonomialOrder order_;
  std::vector<VectorPoly> elements_;
};

bool vector_is_zero(const VectorPoly& v);

// Zero generators are dropped; the empty set is the zero submodule.
ModuleBasis module_buchberger(std::vector<VectorPoly> gens, int nvars, int ncomps,
                              MonomialOrder order);

VectorPoly module_normal_form(const VectorPoly& v, const ModuleBasis& mb);

bool module_member(const VectorPoly& v, const ModuleBasis& mb);

}  // namespace diffop
