#include "diffop/free_module.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace diffop {

namespace {

struct ModLead {
  int pos;
  Term term;
};

bool check_vector(const VectorPoly& v, int nvars, int ncomps, MonomialOrder order) {
  if (static_cast<int>(v.size()) != ncomps) throw Error("vector component count mismatch");
  for (const Polynomial& p : v) {
    if (p.nvars() != nvars) throw Error("vector variable count mismatch");
    if (p.order() != order) throw Error("vector term order mismatch");
  }
  return true;
}

ModLead lead_of(const VectorPoly& v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return {static_cast<int>(k), v[k].lead()};
  throw Error("leading term of the zero vector");
}

VectorPoly sub_times_term(const VectorPoly& a, const VectorPoly& b, const Rational& c,
                          const Monomial& m) {
  VectorPoly out;
  out.reserve(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out.push_back(a[k] - b[k].times_term(c, m));
  return out;
}

VectorPoly scale(const VectorPoly& v, const Rational& c) {
  VectorPoly out;
  out.reserve(v.size());
  for (const Polynomial& p : v) out.push_back(p.scaled(c));
  return out;
}

// full reduction of v by the basis; remainder returned
VectorPoly reduce_full(VectorPoly v, const std::vector<VectorPoly>& basis, int nvars,
                       MonomialOrder order) {
  VectorPoly rem(v.size(), Polynomial(nvars, order));
  while (!vector_is_zero(v)) {
    ModLead lv = lead_of(v);
    bool reduced = false;
    for (const VectorPoly& b : basis) {
      ModLead lb = lead_of(b);
      if (lb.pos == lv.pos && lb.term.mon.divides(lv.term.mon)) {
        v = sub_times_term(v, b, lv.term.coeff / lb.term.coeff, div(lv.term.mon, lb.term.mon));
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      Polynomial t = Polynomial::from_terms(nvars, order, {lv.term});
      rem[static_cast<std::size_t>(lv.pos)] += t;
      v[static_cast<std::size_t>(lv.pos)] -= t;
    }
  }
  return rem;
}

// position-over-term, descending: smaller position first, then bigger monomial
bool lead_descending(const ModLead& a, const ModLead& b, MonomialOrder order) {
  if (a.pos != b.pos) return a.pos < b.pos;
  return compare(a.term.mon, b.term.mon, order) > 0;
}

bool lead_ascending(const ModLead& a, const ModLead& b, MonomialOrder order) {
  if (a.pos != b.pos) return a.pos < b.pos;
  return compare(a.term.mon, b.term.mon, order) < 0;
}

std::vector<VectorPoly> reduce_basis(std::vector<VectorPoly> g, int nvars,
                                     MonomialOrder order) {
  std::erase_if(g, vector_is_zero);
  for (VectorPoly& v : g) v = scale(v, lead_of(v).term.coeff.reciprocal());
  std::sort(g.begin(), g.end(), [&](const VectorPoly& a, const VectorPoly& b) {
    return lead_ascending(lead_of(a), lead_of(b), order);
  });
  std::vector<VectorPoly> minimal;
  for (const VectorPoly& v : g) {
    ModLead lv = lead_of(v);
    bool redundant = false;
    for (const VectorPoly& q : minimal) {
      ModLead lq = lead_of(q);
      if (lq.pos == lv.pos && lq.term.mon.divides(lv.term.mon)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(v);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<VectorPoly> rest;
      rest.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) rest.push_back(minimal[j]);
      VectorPoly r = reduce_full(minimal[i], rest, nvars, order);
      if (r != minimal[i]) {
        minimal[i] = scale(r, lead_of(r).term.coeff.reciprocal());
        changed = true;
      }
    }
  }
  std::sort(minimal.begin(), minimal.end(), [&](const VectorPoly& a, const VectorPoly& b) {
    return lead_descending(lead_of(a), lead_of(b), order);
  });
  return minimal;
}

}  // namespace

bool vector_is_zero(const VectorPoly& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

ModuleBasis module_buchberger(std::vector<VectorPoly> gens, int nvars, int ncomps,
                              MonomialOrder order) {
  for (const VectorPoly& v : gens) check_vector(v, nvars, ncomps, order);
  std::erase_if(gens, vector_is_zero);
  std::sort(gens.begin(), gens.end(), [&](const VectorPoly& a, const VectorPoly& b) {
    return lead_descending(lead_of(a), lead_of(b), order);
  });

  std::vector<VectorPoly> g = std::move(gens);
  std::set<std::pair<int, int>> done;
  std::set<std::tuple<int, int, int>> queue;
  auto push_pairs_for = [&](int j) {
    ModLead lj = lead_of(g[static_cast<std::size_t>(j)]);
    for (int i = 0; i < j; ++i) {
      ModLead li = lead_of(g[static_cast<std::size_t>(i)]);
      if (li.pos != lj.pos) continue;
      Monomial u = Monomial::lcm(li.term.mon, lj.term.mon);
      queue.insert({u.degree(), i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    done.insert({i, j});

    ModLead li = lead_of(g[static_cast<std::size_t>(i)]);
    ModLead lj = lead_of(g[static_cast<std::size_t>(j)]);
    Monomial u = Monomial::lcm(li.term.mon, lj.term.mon);

    bool skip = false;
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      if (k == i || k == j) continue;
      ModLead lk = lead_of(g[static_cast<std::size_t>(k)]);
      if (lk.pos != li.pos || !lk.term.mon.divides(u)) continue;
      std::pair<int, int> ik{std::min(i, k), std::max(i, k)};
      std::pair<int, int> kj{std::min(k, j), std::max(k, j)};
      if (done.count(ik) && done.count(kj)) {
        skip = true;
        break;
      }
    }
    if (skip) continue;

    const VectorPoly& a = g[static_cast<std::size_t>(i)];
    const VectorPoly& b = g[static_cast<std::size_t>(j)];
    VectorPoly s(a.size(), Polynomial(nvars, order));
    for (std::size_t k = 0; k < a.size(); ++k) {
      s[k] = a[k].times_term(li.term.coeff.reciprocal(), div(u, li.term.mon)) -
             b[k].times_term(lj.term.coeff.reciprocal(), div(u, lj.term.mon));
    }
    VectorPoly h = reduce_full(std::move(s), g, nvars, order);
    if (vector_is_zero(h)) continue;
    g.push_back(std::move(h));
    push_pairs_for(static_cast<int>(g.size()) - 1);
  }

  return ModuleBasis(nvars, ncomps, order, reduce_basis(std::move(g), nvars, order));
}

VectorPoly module_normal_form(const VectorPoly& v, const ModuleBasis& mb) {
  check_vector(v, mb.nvars(), mb.components(), mb.order());
  if (mb.elements().empty()) return v;
  return reduce_full(v, mb.elements(), mb.nvars(), mb.order());
}

bool module_member(const VectorPoly& v, const ModuleBasis& mb) {
  return vector_is_zero(module_normal_form(v, mb));
}

}  // namespace diffop
