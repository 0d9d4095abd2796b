#include "diffop/polynomial.hpp"

#include <algorithm>
#include <map>

namespace diffop {

const char* order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::kDegRevLex: return "degrevlex";
    case MonomialOrder::kDegLex: return "deglex";
    case MonomialOrder::kLex: return "lex";
  }
  throw Error("unknown monomial order");
}

MonomialOrder order_from_name(const std::string& name) {
  if (name == "degrevlex") return MonomialOrder::kDegRevLex;
  if (name == "deglex") return MonomialOrder::kDegLex;
  if (name == "lex") return MonomialOrder::kLex;
  throw Error("unknown monomial order: " + name);
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (nvars() != o.nvars()) throw Error("monomial variable count mismatch");
  std::vector<int> e(e_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] += o.e_[k];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
  if (nvars() != o.nvars()) throw Error("monomial variable count mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k)
    if (e_[k] > o.e_[k]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw Error("monomial variable count mismatch");
  std::vector<int> e(a.e_);
  for (std::size_t k = 0; k < e.size(); ++k) e[k] = std::max(e[k], b.e_[k]);
  return Monomial(std::move(e));
}

Monomial div(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw Error("monomial division is not exact");
  std::vector<int> e(a.exps());
  for (std::size_t k = 0; k < e.size(); ++k) e[k] -= b.exps()[k];
  return Monomial(std::move(e));
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (a.nvars() != b.nvars()) throw Error("monomial variable count mismatch");
  const int n = a.nvars();
  switch (order) {
    case MonomialOrder::kDegRevLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      // Equal degree: the one with the smaller rightmost differing exponent
      // is the larger monomial.
      for (int k = n - 1; k >= 0; --k) {
        if (a.exp(k) != b.exp(k)) return a.exp(k) < b.exp(k) ? 1 : -1;
      }
      return 0;
    }
    case MonomialOrder::kDegLex: {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
      for (int k = 0; k < n; ++k) {
        if (a.exp(k) != b.exp(k)) return a.exp(k) < b.exp(k) ? -1 : 1;
      }
      return 0;
    }
    case MonomialOrder::kLex: {
      for (int k = 0; k < n; ++k) {
        if (a.exp(k) != b.exp(k)) return a.exp(k) < b.exp(k) ? -1 : 1;
      }
      return 0;
    }
  }
  throw Error("unknown monomial order");
}

std::vector<Monomial> monomials_up_to_degree(int nvars, int maxdeg) {
  if (nvars < 0 || maxdeg < 0) throw Error("bad monomial enumeration bounds");
  std::vector<Monomial> out;
  if (nvars == 0) {
    out.push_back(Monomial(0));
    return out;
  }
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  auto fixed_degree = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      e[static_cast<std::size_t>(pos)] = left;
      out.push_back(Monomial(e));
      e[static_cast<std::size_t>(pos)] = 0;
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  for (int d = 0; d <= maxdeg; ++d) fixed_degree(fixed_degree, 0, d);
  return out;
}

Polynomial Polynomial::constant(int nvars, MonomialOrder order, Rational c) {
  Polynomial p(nvars, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars), std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int nvars, MonomialOrder order, int k) {
  if (k < 0 || k >= nvars) throw Error("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(k)] = 1;
  Polynomial p(nvars, order);
  p.terms_.push_back({Monomial(std::move(e)), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(int nvars, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(nvars, order);
  for (const Term& t : terms)
    if (t.mon.nvars() != nvars) throw Error("term variable count mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return compare(a.mon, b.mon, order_) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term& t : terms_) {
    if (!out.empty() && out.back().mon == t.mon)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

const Term& Polynomial::lead() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, t.mon.degree());
  return d;
}

Rational Polynomial::constant_coeff() const {
  if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coeff;
  return Rational(0);
}

static void check_same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw Error("polynomial variable count mismatch");
  if (a.order() != b.order()) throw Error("polynomial term order mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mon, -t.coeff});
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  Polynomial p(a.nvars_, a.order_);
  p.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    int c = compare(a.terms_[i].mon, b.terms_[j].mon, a.order_);
    if (c > 0) {
      p.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      p.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!s.is_zero()) p.terms_.push_back({a.terms_[i].mon, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) p.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) p.terms_.push_back(b.terms_[j]);
  return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ring(a, b);
  std::map<Monomial, Rational, MonomialDescending> acc{MonomialDescending{a.order_}};
  for (const Term& s : a.terms_) {
    for (const Term& t : b.terms_) {
      Monomial m = s.mon * t.mon;
      Rational c = s.coeff * t.coeff;
      auto [it, fresh] = acc.emplace(std::move(m), c);
      if (!fresh) it->second += c;
    }
  }
  Polynomial p(a.nvars_, a.order_);
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return Polynomial(nvars_, order_);
  Polynomial p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back({t.mon, t.coeff * c});
  return p;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(nvars_, order_);
  if (m.nvars() != nvars_) throw Error("term variable count mismatch");
  Polynomial p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  // multiplying by a fixed monomial preserves the relative order of terms
  for (const Term& t : terms_) p.terms_.push_back({t.mon * m, t.coeff * c});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = Polynomial::constant(nvars_, order_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::partial(int k) const {
  if (k < 0 || k >= nvars_) throw Error("variable index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    int e = t.mon.exp(k);
    if (e == 0) continue;
    std::vector<int> exps = t.mon.exps();
    exps[static_cast<std::size_t>(k)] = e - 1;
    out.push_back({Monomial(std::move(exps)), t.coeff * Rational(e)});
  }
  return Polynomial::from_terms(nvars_, order_, std::move(out));
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw Error("evaluation point has wrong dimension");
  Rational acc(0);
  for (const Term& t : terms_) {
    Rational v = t.coeff;
    for (int k = 0; k < nvars_; ++k) {
      int e = t.mon.exp(k);
      if (e > 0) v *= point[static_cast<std::size_t>(k)].pow(static_cast<unsigned>(e));
    }
    acc += v;
  }
  return acc;
}

}  // namespace diffop
