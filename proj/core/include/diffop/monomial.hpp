#pragma once

// Monomials in a fixed number of variables, and the supported term orders.
//
// Exponent vectors are dense. Every order is a total order compatible with
// multiplication in which 1 (the all-zero vector) is minimal.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "diffop/error.hpp"

namespace diffop {

enum class MonomialOrder : std::uint8_t { kDegRevLex, kDegLex, kLex };

const char* order_name(MonomialOrder order);
MonomialOrder order_from_name(const std::string& name);  // throws Error

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(static_cast<std::size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
      if (v < 0) throw Error("negative exponent in monomial");
  }

  int nvars() const { return static_cast<int>(e_.size()); }
  int exp(int k) const { return e_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& exps() const { return e_; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    for (int v : e_)
      if (v != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;  // this | o
  static Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> e_;
};

// a / b; pre: b.divides(a).
Monomial div(const Monomial& a, const Monomial& b);

// -1, 0, +1 as a sorts below, equal to, above b in the given order.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct MonomialDescending {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b, order) > 0;
  }
};

// All monomials in nvars variables of total degree <= maxdeg, in a fixed
// deterministic order (ascending degree, then lexicographic exponents).
std::vector<Monomial> monomials_up_to_degree(int nvars, int maxdeg);

}  // namespace diffop
