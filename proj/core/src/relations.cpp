#include "diffop/relations.hpp"

#include <algorithm>
#include <utility>

#include "diffop/error.hpp"
#include "diffop/groebner.hpp"

namespace diffop {

Residue straightening_constant(const CoordinateRing& ring, const IndexTuple& i,
                               const IndexTuple& j, int k) {
  if (k < 0 || k >= ring.nvars()) throw Error("variable index out of range");
  return natural_derivation(ring, i, j).coefficients()[static_cast<std::size_t>(k)];
}

std::vector<Relation> relation_instances(const CoordinateRing& ring) {
  const JacobiData& d = jacobi_data(ring);
  std::vector<Relation> out;
  for (const IndexTuple& i : d.rows_r)
    for (const IndexTuple& ip : d.rows_r)
      for (const IndexTuple& j : d.cols_r)
        for (const IndexTuple& jp : d.cols_r1) {
          Relation rel{i, ip, j, jp, minor_det(ring, i, j), {}};
          for (int v = 0; v <= d.r; ++v) {
            int c = jp[v];
            if (j.contains(c)) continue;
            int sign = (d.r + v) % 2 == 0 ? 1 : -1;
            Residue mv = minor_det(ring, ip, jp.erased(v));
            std::vector<int> cols = j.indices();
            cols.push_back(c);
            if (sort_tuple_sign(cols) == 1) sign = -sign;
            rel.terms.push_back(RelationTerm{sign, std::move(mv), IndexTuple(std::move(cols))});
          }
          out.push_back(std::move(rel));
        }
  return out;
}

bool verify_relation(const CoordinateRing& ring, const Relation& rel) {
  Derivation lhs = natural_derivation(ring, rel.iprime, rel.jprime).times(rel.lhs_minor);
  Derivation rhs(ring.shared_from_this(),
                 std::vector<Residue>(static_cast<std::size_t>(ring.nvars()), ring.zero()));
  for (const RelationTerm& t : rel.terms) {
    Derivation part = natural_derivation(ring, rel.i, t.target_cols).times(t.minor);
    if (t.sign < 0)
      rhs -= part;
    else
      rhs += part;
  }
  return lhs == rhs;
}

OperatorExpr relation_lhs(const CoordinateRing& ring, const Relation& rel) {
  return OperatorExpr::multiplication(rel.lhs_minor) *
         OperatorExpr::generator(ring.shared_from_this(), rel.iprime, rel.jprime);
}

OperatorExpr relation_rhs(const CoordinateRing& ring, const Relation& rel) {
  RingPtr rp = ring.shared_from_this();
  OperatorExpr acc = OperatorExpr::zero(rp);
  for (const RelationTerm& t : rel.terms) {
    OperatorExpr part = OperatorExpr::multiplication(t.minor) *
                        OperatorExpr::generator(rp, rel.i, t.target_cols);
    acc = t.sign < 0 ? acc - part : acc + part;
  }
  return acc;
}

PresentationDoc presentation(const CoordinateRing& ring) {
  const JacobiData& d = jacobi_data(ring);
  PresentationDoc doc;
  doc.ring = ring.shared_from_this();
  doc.variables = ring.variables();
  doc.rd1 = ring.generators();
  for (const IndexTuple& i : d.rows_r)
    for (const IndexTuple& j : d.cols_r1) doc.d_symbols.push_back(DSymbol{i, j});
  for (const DSymbol& s : doc.d_symbols)
    for (int k = 0; k < ring.nvars(); ++k)
      doc.rd2.push_back(Rd2Entry{s.rows, s.cols, k,
                                 straightening_constant(ring, s.rows, s.cols, k)});
  doc.rd3 = relation_instances(ring);
  return doc;
}

PresentationReport verify_presentation(const CoordinateRing& ring) {
  PresentationDoc doc = presentation(ring);
  PresentationReport rep;
  for (const Polynomial& f : doc.rd1)
    if (!ring.project(f).is_zero()) {
      rep.rd1_ok = false;
      rep.failures.push_back("defining polynomial does not vanish in the quotient");
    }
  for (int k = 0; k < ring.nvars(); ++k)
    for (int l = k + 1; l < ring.nvars(); ++l)
      if (!(ring.variable(k) * ring.variable(l) == ring.variable(l) * ring.variable(k))) {
        rep.rd1_ok = false;
        rep.failures.push_back("variables fail to commute");
      }
  RingPtr rp = ring.shared_from_this();
  for (const Rd2Entry& e : doc.rd2) {
    OperatorExpr gen = OperatorExpr::generator(rp, e.rows, e.cols);
    OperatorExpr var = OperatorExpr::multiplication(ring.variable(e.k));
    OperatorExpr lhs = gen * var;
    OperatorExpr rhs = var * gen + OperatorExpr::multiplication(e.constant);
    if (!operators_equal_up_to_order(lhs, rhs, 1)) {
      rep.rd2_ok = false;
      rep.failures.push_back("straightening relation fails for d[" + e.rows.str() + ";" +
                             e.cols.str() + "] and variable " +
                             ring.variables()[static_cast<std::size_t>(e.k)]);
    }
  }
  for (const Relation& rel : doc.rd3) {
    bool ok = verify_relation(ring, rel) &&
              operators_equal_up_to_order(relation_lhs(ring, rel),
                                          relation_rhs(ring, rel), 1);
    if (!ok) {
      rep.rd3_ok = false;
      rep.failures.push_back("rewriting relation fails at i=" + rel.i.str() +
                             " i'=" + rel.iprime.str() + " j=" + rel.j.str() +
                             " j'=" + rel.jprime.str());
    }
  }
  return rep;
}

bool order_membership(const CoordinateRing& ring, const IndexTuple& i,
                      const IndexTuple& j,
                      const std::vector<FiltrationTerm>& candidate, int bound) {
  if (bound < 0) throw Error("order bound must be nonnegative");
  const JacobiData& d = jacobi_data(ring);
  if (i.size() != d.r || j.size() != d.r)
    throw Error("order filtration pivot needs tuples of size rank");
  Residue delta = minor_det(ring, i, j);
  if (delta.is_zero()) throw Error("order filtration needs a nonzero top minor");

  std::vector<int> complement;
  for (int k = 0; k < ring.nvars(); ++k)
    if (!j.contains(k)) complement.push_back(k);
  const std::size_t q = complement.size();

  for (const FiltrationTerm& t : candidate) {
    if (t.alpha.size() != q)
      throw Error("filtration exponents must cover the complement columns");
    int total = 0;
    for (int a : t.alpha) {
      if (a < 0) throw Error("filtration exponents must be nonnegative");
      total += a;
    }
    if (total > bound) throw Error("candidate word exceeds the order bound");
    if (t.coeff.ring().get() != &ring) throw Error("operator ring mismatch");
  }

  std::vector<Derivation> base;
  base.reserve(q);
  for (int c : complement) {
    std::vector<int> cols = j.indices();
    cols.push_back(c);
    base.push_back(natural_derivation_listed(ring, i, std::move(cols)));
  }

  auto apply_base = [&](std::size_t t, const LocalizedElement& e) {
    const Residue& u = e.numerator();
    Rational p(static_cast<long>(e.power()));
    Residue du = base[t].apply(u);
    Residue dd = base[t].apply(delta);
    return LocalizedElement(du * delta - (u * dd).scaled(p), delta, e.power() + 2);
  };

  for (const Monomial& m : monomials_up_to_degree(ring.nvars(), bound)) {
    Residue mono = ring.project(
        Polynomial::from_terms(ring.nvars(), ring.order(), {Term{m, Rational(1)}}));
    LocalizedElement total(ring.zero(), delta, 0);
    for (const FiltrationTerm& t : candidate) {
      LocalizedElement e(mono, delta, 0);
      for (std::size_t k = 0; k < q; ++k)
        for (int rep = 0; rep < t.alpha[k]; ++rep) e = apply_base(k, e);
      total = total + t.coeff * e;
    }
    if (!total.in_coordinate_ring()) return false;
  }
  return true;
}

}  // namespace diffop
