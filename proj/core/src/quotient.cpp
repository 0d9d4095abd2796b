#include "diffop/quotient.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "diffop/derivation.hpp"
#include "diffop/jacobi.hpp"
#include "diffop/parse.hpp"

namespace diffop {

namespace {

void check_same_ring(const Residue& a, const Residue& b) {
  if (a.ring().get() != b.ring().get()) throw Error("residues from different rings");
}

}  // namespace

bool Residue::is_one() const {
  return rep_.total_degree() == 0 && rep_.constant_coeff() == Rational(1);
}

Residue Residue::operator-() const { return Residue(ring_, -rep_); }

Residue Residue::scaled(const Rational& c) const { return Residue(ring_, rep_.scaled(c)); }

Residue Residue::pow(unsigned e) const {
  Residue out = ring_->one();
  for (unsigned t = 0; t < e; ++t) out *= *this;
  return out;
}

Residue operator+(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  // Sums of normal forms are normal forms: no monomial becomes reducible.
  return Residue(a.ring_, a.rep_ + b.rep_);
}

Residue operator-(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  return Residue(a.ring_, a.rep_ - b.rep_);
}

Residue operator*(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  return a.ring_->project(a.rep_ * b.rep_);
}

bool operator==(const Residue& a, const Residue& b) {
  check_same_ring(a, b);
  return a.rep_ == b.rep_;
}

std::string Residue::str() const { return to_string(rep_, ring_->variables()); }

LocalizedElement::LocalizedElement(Residue numerator, Residue delta, int power)
    : numerator_(std::move(numerator)), delta_(std::move(delta)), power_(power) {
  check_same_ring(numerator_, delta_);
  if (power_ < 0) throw Error("negative localization power");
  if (delta_.is_zero()) throw Error("localization at zero");
}

LocalizedElement LocalizedElement::in_ring(const Residue& a) {
  return LocalizedElement(a, a.ring()->one(), 0);
}

LocalizedElement LocalizedElement::operator-() const {
  return LocalizedElement(numerator_.scaled(Rational(-1)), delta_, power_);
}

LocalizedElement LocalizedElement::times(const Residue& a) const {
  return LocalizedElement(numerator_ * a, delta_, power_);
}

namespace {

LocalizedElement add_signed(const LocalizedElement& a, const LocalizedElement& b, bool minus) {
  Residue bn = minus ? -b.numerator() : b.numerator();
  if (b.power() == 0)
    return LocalizedElement(a.numerator() + bn * a.delta().pow(static_cast<unsigned>(a.power())),
                            a.delta(), a.power());
  if (a.power() == 0)
    return LocalizedElement(a.numerator() * b.delta().pow(static_cast<unsigned>(b.power())) + bn,
                            b.delta(), b.power());
  if (a.delta() == b.delta()) {
    int u = std::max(a.power(), b.power());
    return LocalizedElement(
        a.numerator() * a.delta().pow(static_cast<unsigned>(u - a.power())) +
            bn * a.delta().pow(static_cast<unsigned>(u - b.power())),
        a.delta(), u);
  }
  Residue da = a.delta().pow(static_cast<unsigned>(a.power()));
  Residue db = b.delta().pow(static_cast<unsigned>(b.power()));
  return LocalizedElement(a.numerator() * db + bn * da, da * db, 1);
}

}  // namespace

LocalizedElement operator+(const LocalizedElement& a, const LocalizedElement& b) {
  return add_signed(a, b, false);
}

LocalizedElement operator-(const LocalizedElement& a, const LocalizedElement& b) {
  return add_signed(a, b, true);
}

LocalizedElement operator*(const LocalizedElement& a, const LocalizedElement& b) {
  Residue num = a.numerator() * b.numerator();
  if (a.power() == 0) return LocalizedElement(num, b.delta(), b.power());
  if (b.power() == 0) return LocalizedElement(num, a.delta(), a.power());
  if (a.delta() == b.delta()) return LocalizedElement(num, a.delta(), a.power() + b.power());
  return LocalizedElement(num,
                          a.delta().pow(static_cast<unsigned>(a.power())) *
                              b.delta().pow(static_cast<unsigned>(b.power())),
                          1);
}

bool operator==(const LocalizedElement& a, const LocalizedElement& b) {
  return a.numerator() * b.delta().pow(static_cast<unsigned>(b.power())) ==
         b.numerator() * a.delta().pow(static_cast<unsigned>(a.power()));
}

std::optional<Residue> LocalizedElement::in_coordinate_ring() const {
  const CoordinateRing& R = *ring();
  if (power_ == 0) return numerator_;
  if (numerator_.is_zero()) return R.zero();
  Polynomial special = delta_.rep().pow(static_cast<unsigned>(power_));
  auto w = cofactor_membership(numerator_.rep(), special, R.gb().elements());
  if (!w) return std::nullopt;
  Residue witness = R.project(*w);
  if (witness * R.project(special) != numerator_)
    throw Error("localization witness failed re-multiplication");
  return witness;
}

std::string LocalizedElement::str() const {
  if (power_ == 0) return numerator_.str();
  std::string out = "(" + numerator_.str() + ") / (" + delta_.str() + ")";
  if (power_ != 1) out += "^" + std::to_string(power_);
  return out;
}

CoordinateRing::CoordinateRing(std::vector<std::string> vars, std::vector<Polynomial> gens,
                               MonomialOrder order, GroebnerBasis gb, int dim)
    : vars_(std::move(vars)),
      gens_(std::move(gens)),
      order_(order),
      nvars_(static_cast<int>(vars_.size())),
      gb_(std::move(gb)),
      dim_(dim) {}

CoordinateRing::~CoordinateRing() = default;

RingPtr CoordinateRing::create(std::vector<std::string> variables,
                               std::vector<Polynomial> generators, MonomialOrder order) {
  const int n = static_cast<int>(variables.size());
  std::set<std::string> seen;
  for (const std::string& v : variables) {
    if (!valid_variable_name(v)) throw Error("invalid variable name: " + v);
    if (!seen.insert(v).second) throw Error("duplicate variable name: " + v);
  }
  for (const Polynomial& f : generators) {
    if (f.nvars() != n || f.order() != order) throw Error("generator from a different ring");
    if (f.is_zero()) throw PreconditionError("zero polynomial among the generators");
  }

  GroebnerBasis gb = buchberger(generators, n, order);
  if (gb.is_unit()) throw PreconditionError("the relations generate the unit ideal");
  int dim = krull_dimension(gb);
  if (dim == 0)
    throw PreconditionError("the relation ideal is maximal: the variety is a point set");

  RingPtr ring(new CoordinateRing(std::move(variables), std::move(generators), order,
                                  std::move(gb), dim));
  ring->zero_divisor_probe();
  return ring;
}

RingPtr CoordinateRing::create(std::vector<std::string> variables,
                               const std::vector<std::string>& generator_text,
                               MonomialOrder order) {
  std::vector<Polynomial> gens;
  gens.reserve(generator_text.size());
  for (const std::string& text : generator_text)
    gens.push_back(parse_polynomial(text, variables, order));
  return create(std::move(variables), std::move(gens), order);
}

Residue CoordinateRing::project(const Polynomial& p) const {
  if (p.nvars() != nvars_ || p.order() != order_)
    throw Error("polynomial from a different ring");
  return Residue(shared_from_this(), normal_form(p, gb_));
}

Residue CoordinateRing::project(const std::string& text) const {
  return project(parse_polynomial(text, vars_, order_));
}

Residue CoordinateRing::zero() const {
  return Residue(shared_from_this(), Polynomial(nvars_, order_));
}

Residue CoordinateRing::one() const { return constant(Rational(1)); }

Residue CoordinateRing::constant(const Rational& c) const {
  return Residue(shared_from_this(), Polynomial::constant(nvars_, order_, c));
}

Residue CoordinateRing::variable(int k) const {
  return project(Polynomial::variable(nvars_, order_, k));
}

// Sanity check of the primality assumption: products of random nonzero
// residues must stay nonzero in a domain. A hit is a definite witness of zero
// divisors; absence of hits proves nothing. Seeded for reproducibility.
void CoordinateRing::zero_divisor_probe() const {
  if (gb_.elements().empty()) return;
  std::mt19937 rng(271828u);
  const std::vector<Monomial> mons = monomials_up_to_degree(nvars_, 3);
  auto random_residue = [&]() {
    std::vector<Term> terms;
    const int nterms = 1 + static_cast<int>(rng() % 4u);
    for (int t = 0; t < nterms; ++t) {
      const Monomial& m = mons[rng() % mons.size()];
      const long c = static_cast<long>(rng() % 5u) - 2;
      if (c != 0) terms.push_back({m, Rational(c)});
    }
    return project(Polynomial::from_terms(nvars_, order_, terms));
  };
  int tested = 0;
  for (int attempt = 0; attempt < 400 && tested < 20; ++attempt) {
    Residue a = random_residue();
    Residue b = random_residue();
    if (a.is_zero() || b.is_zero()) continue;
    ++tested;
    if ((a * b).is_zero())
      throw PreconditionError("zero divisors in the coordinate ring: (" + a.str() + ") * (" +
                              b.str() + ") = 0, so the relation ideal is not prime");
  }
}

}  // namespace diffop
