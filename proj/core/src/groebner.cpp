#include "diffop/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace diffop {

namespace {

void check_ring(const std::vector<Polynomial>& gens, int nvars, MonomialOrder order) {
  for (const Polynomial& g : gens) {
    if (g.nvars() != nvars) throw Error("generator variable count mismatch");
    if (g.order() != order) throw Error("generator term order mismatch");
  }
}

// One full-division step sequence: returns the remainder of p modulo basis.
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial work = p;
  std::vector<Term> rem;
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    bool reduced = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      const Term& gl = g.lead();
      if (gl.mon.divides(lt.mon)) {
        work = work - g.times_term(lt.coeff / gl.coeff, div(lt.mon, gl.mon));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      work = work - Polynomial::from_terms(p.nvars(), p.order(), {lt});
    }
  }
  return Polynomial::from_terms(p.nvars(), p.order(), std::move(rem));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Term& lf = f.lead();
  const Term& lg = g.lead();
  Monomial u = Monomial::lcm(lf.mon, lg.mon);
  return f.times_term(lf.coeff.reciprocal(), div(u, lf.mon)) -
         g.times_term(lg.coeff.reciprocal(), div(u, lg.mon));
}

// Minimalize, tail-reduce, make monic, sort descending by leading monomial.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> g, MonomialOrder order) {
  std::erase_if(g, [](const Polynomial& p) { return p.is_zero(); });
  for (Polynomial& p : g) p = p.scaled(p.lead().coeff.reciprocal());
  std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead().mon, b.lead().mon, order) < 0;
  });
  // drop elements whose lead is divisible by an earlier (smaller) lead
  std::vector<Polynomial> minimal;
  for (const Polynomial& p : g) {
    bool redundant = false;
    for (const Polynomial& q : minimal) {
      if (q.lead().mon.divides(p.lead().mon)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(p);
  }
  // tail reduction against all the others until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> rest;
      rest.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) rest.push_back(minimal[j]);
      Polynomial r = reduce_full(minimal[i], rest);
      if (r != minimal[i]) {
        minimal[i] = r.scaled(r.lead().coeff.reciprocal());
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead().mon, b.lead().mon, order) > 0;
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, int nvars, MonomialOrder order) {
  check_ring(gens, nvars, order);
  std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return compare(a.lead().mon, b.lead().mon, order) > 0;
  });

  std::vector<Polynomial> g = std::move(gens);
  using PairKey = std::pair<int, int>;
  std::set<PairKey> done;
  // candidate pairs keyed by (lcm degree, i, j) for a deterministic strategy
  std::set<std::tuple<int, int, int>> queue;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial u = Monomial::lcm(g[i].lead().mon, g[j].lead().mon);
      queue.insert({u.degree(), i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    done.insert({i, j});

    const Monomial& mi = g[i].lead().mon;
    const Monomial& mj = g[j].lead().mon;
    Monomial u = Monomial::lcm(mi, mj);
    // coprime leads: the s-polynomial reduces to zero
    if (u == mi * mj) continue;
    // chain criterion: a third element divides the lcm and both of its
    // pairs were already treated
    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      if (k == i || k == j) continue;
      if (!g[k].lead().mon.divides(u)) continue;
      PairKey ik{std::min(i, k), std::max(i, k)};
      PairKey kj{std::min(k, j), std::max(k, j)};
      if (done.count(ik) && done.count(kj)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    Polynomial h = reduce_full(s_polynomial(g[i], g[j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      // unit ideal
      return GroebnerBasis(nvars, order,
                           {Polynomial::constant(nvars, order, Rational(1))});
    }
    g.push_back(h);
    push_pairs_for(static_cast<int>(g.size()) - 1);
  }

  return GroebnerBasis(nvars, order, reduce_basis(std::move(g), order));
}

GroebnerBasis buchberger(std::vector<Polynomial> gens) {
  if (gens.empty()) throw Error("no generators; use the explicit-ring overload");
  int nvars = gens[0].nvars();
  MonomialOrder order = gens[0].order();
  return buchberger(std::move(gens), nvars, order);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars() || p.order() != gb.order())
    throw Error("polynomial does not match the basis ring");
  if (gb.elements().empty()) return p;
  return reduce_full(p, gb.elements());
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.nvars() != b.nvars()) throw Error("ideal comparison across variable counts");
  if (a.order() != b.order()) throw Error("ideal comparison across term orders");
  return a.elements() == b.elements();
}

int krull_dimension(const GroebnerBasis& gb) {
  if (gb.is_unit()) return -1;
  const int n = gb.nvars();
  if (gb.elements().empty()) return n;
  if (n > 24) throw Error("dimension computation limited to 24 variables");

  std::vector<std::uint32_t> supports;
  supports.reserve(gb.elements().size());
  for (const Polynomial& p : gb.elements()) {
    std::uint32_t mask = 0;
    for (int k = 0; k < n; ++k)
      if (p.lead().mon.exp(k) > 0) mask |= (std::uint32_t{1} << k);
    supports.push_back(mask);
  }

  int best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    bool independent = true;
    for (std::uint32_t m : supports) {
      if ((m & ~s) == 0) {  // leading monomial supported inside s
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

namespace {

// An element of (special) + (others) with the coefficient of special tracked.
struct Tracked {
  Polynomial p;
  Polynomial c;  // p ≡ c * special modulo (others)
};

Tracked tracked_reduce(Tracked t, const std::vector<Tracked>& basis) {
  std::vector<Term> rem;
  while (!t.p.is_zero()) {
    const Term& lt = t.p.lead();
    bool reduced = false;
    for (const Tracked& b : basis) {
      if (b.p.is_zero()) continue;
      const Term& bl = b.p.lead();
      if (bl.mon.divides(lt.mon)) {
        Rational c = lt.coeff / bl.coeff;
        Monomial m = div(lt.mon, bl.mon);
        t.p = t.p - b.p.times_term(c, m);
        t.c = t.c - b.c.times_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      t.p = t.p - Polynomial::from_terms(t.p.nvars(), t.p.order(), {lt});
    }
  }
  t.p = Polynomial::from_terms(t.c.nvars(), t.c.order(), std::move(rem));
  return t;
}

}  // namespace

std::optional<Polynomial> cofactor_membership(const Polynomial& p,
                                              const Polynomial& special,
                                              const std::vector<Polynomial>& others) {
  const int nvars = p.nvars();
  const MonomialOrder order = p.order();
  if (special.is_zero()) throw Error("cofactor membership with zero pivot element");
  check_ring({special}, nvars, order);
  check_ring(others, nvars, order);

  std::vector<Tracked> g;
  Polynomial zero(nvars, order);
  g.push_back({special, Polynomial::constant(nvars, order, Rational(1))});
  for (const Polynomial& f : others)
    if (!f.is_zero()) g.push_back({f, zero});

  std::set<std::tuple<int, int, int>> queue;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial u = Monomial::lcm(g[i].p.lead().mon, g[j].p.lead().mon);
      queue.insert({u.degree(), i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    const Monomial& mi = g[i].p.lead().mon;
    const Monomial& mj = g[j].p.lead().mon;
    Monomial u = Monomial::lcm(mi, mj);
    if (u == mi * mj) continue;  // the reduction to zero never needs tracking

    const Term& li = g[i].p.lead();
    const Term& lj = g[j].p.lead();
    Tracked s;
    s.p = g[i].p.times_term(li.coeff.reciprocal(), div(u, li.mon)) -
          g[j].p.times_term(lj.coeff.reciprocal(), div(u, lj.mon));
    s.c = g[i].c.times_term(li.coeff.reciprocal(), div(u, li.mon)) -
          g[j].c.times_term(lj.coeff.reciprocal(), div(u, lj.mon));
    Tracked h = tracked_reduce(std::move(s), g);
    if (h.p.is_zero()) continue;
    g.push_back(std::move(h));
    push_pairs_for(static_cast<int>(g.size()) - 1);
  }

  // divide the target, accumulating the cofactor of special
  Polynomial work = p;
  Polynomial w(nvars, order);
  while (!work.is_zero()) {
    const Term& lt = work.lead();
    bool reduced = false;
    for (const Tracked& b : g) {
      const Term& bl = b.p.lead();
      if (bl.mon.divides(lt.mon)) {
        Rational c = lt.coeff / bl.coeff;
        Monomial m = div(lt.mon, bl.mon);
        work = work - b.p.times_term(c, m);
        w = w + b.c.times_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) return std::nullopt;
  }
  return w;
}

}  // namespace diffop
