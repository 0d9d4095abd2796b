#include "diffop/verify.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "diffop/derivation.hpp"
#include "diffop/error.hpp"
#include "diffop/groebner.hpp"
#include "diffop/jacobi.hpp"
#include "diffop/relations.hpp"

namespace diffop {

namespace {

Residue random_residue(const CoordinateRing& ring, std::mt19937& rng, int maxdeg) {
  const std::vector<Monomial> pool = monomials_up_to_degree(ring.nvars(), maxdeg);
  for (;;) {
    Polynomial p(ring.nvars(), ring.order());
    const unsigned picks = 1 + rng() % 3;
    for (unsigned t = 0; t < picks; ++t) {
      long c = static_cast<long>(rng() % 5u) - 2;
      if (c == 0) continue;
      const Monomial& m = pool[rng() % pool.size()];
      p = p + Polynomial::from_terms(ring.nvars(), ring.order(), {Term{m, Rational(c)}});
    }
    Residue a = ring.project(p);
    if (!a.is_zero()) return a;
  }
}

struct Check {
  bool ok = true;
  std::string detail;
  void fail(const std::string& d) {
    if (ok) {
      ok = false;
      detail = d;
    }
  }
};

Check suite_rank_tuples(const CoordinateRing& ring) {
  Check c;
  const JacobiData& d = jacobi_data(ring);
  const std::set<IndexTuple> rows(d.rows_r.begin(), d.rows_r.end());
  const std::set<IndexTuple> cols(d.cols_r.begin(), d.cols_r.end());
  for (const IndexTuple& i : tuples_of_size(d.r, ring.generator_count()))
    for (const IndexTuple& j : tuples_of_size(d.r, ring.nvars())) {
      bool nonzero = !minor_det(ring, i, j).is_zero();
      bool listed = rows.count(i) != 0 && cols.count(j) != 0;
      if (nonzero != listed)
        c.fail("minor at " + i.str() + "," + j.str() +
               (nonzero ? " is nonzero off the tuple lists" : " vanishes on the tuple lists"));
    }
  const std::set<IndexTuple> critical(d.cols_r1.begin(), d.cols_r1.end());
  for (const IndexTuple& j : tuples_of_size(d.r + 1, ring.nvars())) {
    bool expected = false;
    for (int v = 0; v <= d.r && !expected; ++v) expected = cols.count(j.erased(v)) != 0;
    if (expected != (critical.count(j) != 0))
      c.fail("critical column list is wrong at " + j.str());
  }
  return c;
}

Check suite_ideal_chain(const CoordinateRing& ring) {
  Check c;
  const JacobiData& d = jacobi_data(ring);
  if (!jacobian_ideal(ring, 0).gb.is_unit()) c.fail("the 0-minor ideal is not the unit ideal");
  for (int k = 1; k + 1 <= d.r; ++k) {
    const JacobianIdeal& small = jacobian_ideal(ring, k);
    for (const Polynomial& p : jacobian_ideal(ring, k + 1).minors)
      if (!ideal_member(p, small.gb))
        c.fail("minor ideal chain breaks between sizes " + std::to_string(k) + " and " +
               std::to_string(k + 1));
  }
  if (d.r > 0 && jacobian_ideal(ring, d.r).minors.empty())
    c.fail("the top minor ideal vanishes");
  if (d.r + 1 <= std::min(ring.generator_count(), ring.nvars()))
    for (const IndexTuple& i : tuples_of_size(d.r + 1, ring.generator_count()))
      for (const IndexTuple& j : tuples_of_size(d.r + 1, ring.nvars()))
        if (!minor_det(ring, i, j).is_zero())
          c.fail("a minor above the rank is nonzero at " + i.str() + "," + j.str());
  for (int a = 1; a <= d.r; ++a)
    for (int b = a; a + b <= d.r; ++b) {
      std::vector<Polynomial> products = ring.gb().elements();
      for (const Polynomial& pa : jacobian_ideal(ring, a).minors)
        for (const Polynomial& pb : jacobian_ideal(ring, b).minors)
          products.push_back(pa * pb);
      GroebnerBasis basis = buchberger(std::move(products), ring.nvars(), ring.order());
      for (const Polynomial& p : jacobian_ideal(ring, a + b).minors)
        if (!ideal_member(p, basis))
          c.fail("a " + std::to_string(a + b) +
                 "-minor is not a combination of products of " + std::to_string(a) +
                 "- and " + std::to_string(b) + "-minors");
    }
  return c;
}

Check suite_dimension(const CoordinateRing& ring) {
  Check c;
  int r = rank(ring);
  if (ring.dimension() < 1) c.fail("the quotient has dimension zero");
  if (r != ring.nvars() - ring.dimension())
    c.fail("rank " + std::to_string(r) + " does not equal variables minus dimension " +
           std::to_string(ring.nvars() - ring.dimension()));
  return c;
}

Check suite_image_ideal(const CoordinateRing& ring) {
  Check c;
  if (!ideal_equal(image_ideal(ring), jacobian_ideal(ring, rank(ring)).gb))
    c.fail("derivation coefficient values do not generate the top minor ideal");
  return c;
}

Check suite_annihilation(const CoordinateRing& ring) {
  Check c;
  const JacobiData& d = jacobi_data(ring);
  const std::vector<NaturalGenerator> gens = natural_generators(ring);
  for (const NaturalGenerator& g : gens)
    if (!is_derivation(ring, g.derivation.coefficients()))
      c.fail("generator d[" + g.rows.str() + ";" + g.cols.str() +
             "] does not annihilate the defining polynomials");
  const std::set<IndexTuple> rows(d.rows_r.begin(), d.rows_r.end());
  const std::set<IndexTuple> critical(d.cols_r1.begin(), d.cols_r1.end());
  for (const IndexTuple& i : tuples_of_size(d.r, ring.generator_count()))
    for (const IndexTuple& j : tuples_of_size(d.r + 1, ring.nvars())) {
      bool nonzero = !natural_derivation(ring, i, j).is_zero();
      bool listed = rows.count(i) != 0 && critical.count(j) != 0;
      if (nonzero != listed)
        c.fail("derivation at " + i.str() + "," + j.str() +
               (nonzero ? " is nonzero off the tuple lists" : " vanishes on the tuple lists"));
    }
  for (const NaturalGenerator& g : gens) {
    for (int v = 0; v + 1 < g.cols.size(); ++v) {
      std::vector<int> swapped = g.cols.indices();
      std::swap(swapped[static_cast<std::size_t>(v)], swapped[static_cast<std::size_t>(v) + 1]);
      if (!(natural_derivation_listed(ring, g.rows, swapped) == -g.derivation))
        c.fail("transposing two columns does not flip the sign at " + g.cols.str());
    }
    std::vector<int> repeated = g.cols.indices();
    repeated[0] = repeated[static_cast<std::size_t>(g.cols.size()) - 1];
    if (!natural_derivation_listed(ring, g.rows, repeated).is_zero())
      c.fail("a repeated column does not give the zero derivation");
  }
  std::mt19937 rng(112358u);
  if (!gens.empty()) {
    const Derivation& del = gens.front().derivation;
    for (int t = 0; t < 5; ++t) {
      Residue a = random_residue(ring, rng, 2);
      Residue b = random_residue(ring, rng, 2);
      if (!(del.apply(a * b) == del.apply(a) * b + a * del.apply(b)))
        c.fail("the product rule fails on a random pair");
    }
  }
  return c;
}

Check suite_relation_soundness(const CoordinateRing& ring) {
  Check c;
  RingPtr rp = ring.shared_from_this();
  for (const Relation& rel : relation_instances(ring)) {
    if (!verify_relation(ring, rel))
      c.fail("coefficient vectors differ at i=" + rel.i.str() + " i'=" + rel.iprime.str() +
             " j=" + rel.j.str() + " j'=" + rel.jprime.str());
    if (!operators_equal_up_to_order(relation_lhs(ring, rel), relation_rhs(ring, rel), 1))
      c.fail("operator actions differ at i=" + rel.i.str() + " i'=" + rel.iprime.str() +
             " j=" + rel.j.str() + " j'=" + rel.jprime.str());
  }
  for (const NaturalGenerator& g : natural_generators(ring)) {
    OperatorExpr gen = OperatorExpr::generator(rp, g.rows, g.cols);
    for (int k = 0; k < ring.nvars(); ++k) {
      OperatorExpr var = OperatorExpr::multiplication(ring.variable(k));
      OperatorExpr rhs =
          OperatorExpr::multiplication(straightening_constant(ring, g.rows, g.cols, k));
      if (!operators_equal_up_to_order(gen * var - var * gen, rhs, 1))
        c.fail("commutator with " + ring.variables()[static_cast<std::size_t>(k)] +
               " is not the straightening constant at d[" + g.rows.str() + ";" +
               g.cols.str() + "]");
    }
  }
  return c;
}

Check suite_presentation(const CoordinateRing& ring) {
  Check c;
  PresentationReport rep = verify_presentation(ring);
  if (!rep.all_ok()) c.fail(rep.failures.empty() ? "presentation check failed" : rep.failures[0]);
  return c;
}

Matrix<LocalizedElement> mat_mul(const Matrix<LocalizedElement>& a,
                                 const Matrix<LocalizedElement>& b) {
  Matrix<LocalizedElement> out(a.rows(), b.cols(), a.at(0, 0));
  for (int v = 0; v < a.rows(); ++v)
    for (int u = 0; u < b.cols(); ++u) {
      LocalizedElement acc = a.at(v, 0) * b.at(0, u);
      for (int t = 1; t < a.cols(); ++t) acc = acc + a.at(v, t) * b.at(t, u);
      out.at(v, u) = acc;
    }
  return out;
}

Check suite_minor_identities(const CoordinateRing& ring) {
  Check c;
  const JacobiData& d = jacobi_data(ring);
  for (const IndexTuple& i : d.rows_r)
    for (const IndexTuple& i2 : d.rows_r)
      for (const IndexTuple& j : d.cols_r)
        for (const IndexTuple& j2 : d.cols_r)
          if (!verify_minor_identity(ring, i, i2, j, j2))
            c.fail("the exchange identity fails at " + i.str() + "," + i2.str() + "," +
                   j.str() + "," + j2.str());
  if (d.r == 0) return c;
  const IndexTuple& i = d.pivot_rows;
  LocalizedElement one = LocalizedElement::in_ring(ring.one());
  LocalizedElement zero = LocalizedElement::in_ring(ring.zero());
  auto is_identity = [&](const Matrix<LocalizedElement>& h) {
    for (int v = 0; v < h.rows(); ++v)
      for (int u = 0; u < h.cols(); ++u)
        if (!(h.at(v, u) == (v == u ? one : zero))) return false;
    return true;
  };
  for (const IndexTuple& j : d.cols_r) {
    if (!is_identity(change_of_basis(ring, i, j, j)))
      c.fail("the change of basis from " + j.str() + " to itself is not the identity");
    for (const IndexTuple& j2 : d.cols_r)
      if (!is_identity(mat_mul(change_of_basis(ring, i, j, j2), change_of_basis(ring, i, j2, j))))
        c.fail("the changes of basis between " + j.str() + " and " + j2.str() +
               " are not inverse");
  }
  std::vector<IndexTuple> cols = d.cols_r;
  if (cols.size() > 4) cols.resize(4);
  for (const IndexTuple& j : cols)
    for (const IndexTuple& j2 : cols)
      for (const IndexTuple& j3 : cols) {
        Matrix<LocalizedElement> lhs =
            mat_mul(change_of_basis(ring, i, j, j2), change_of_basis(ring, i, j2, j3));
        Matrix<LocalizedElement> rhs = change_of_basis(ring, i, j, j3);
        for (int v = 0; v < lhs.rows(); ++v)
          for (int u = 0; u < lhs.cols(); ++u)
            if (!(lhs.at(v, u) == rhs.at(v, u)))
              c.fail("the composition rule fails at " + j.str() + "," + j2.str() + "," +
                     j3.str());
      }
  if (d.rows_r.size() > 1)
    for (const IndexTuple& j : d.cols_r)
      for (const IndexTuple& j2 : d.cols_r) {
        Matrix<LocalizedElement> a = change_of_basis(ring, d.rows_r[0], j, j2);
        Matrix<LocalizedElement> b = change_of_basis(ring, d.rows_r[1], j, j2);
        for (int v = 0; v < a.rows(); ++v)
          for (int u = 0; u < a.cols(); ++u)
            if (!(a.at(v, u) == b.at(v, u)))
              c.fail("the change of basis depends on the row tuple at " + j.str() + "," +
                     j2.str());
      }
  for (const IndexTuple& j : d.cols_r)
    for (const IndexTuple& j2 : d.cols_r) {
      Matrix<LocalizedElement> h = change_of_basis(ring, i, j, j2);
      for (int v = 0; v < d.r; ++v)
        for (int u = 0; u < d.r; ++u) {
          LocalizedElement acc = h.at(0, u).times(jacobi_entry(ring, i[v], j[0]));
          for (int t = 1; t < d.r; ++t)
            acc = acc + h.at(t, u).times(jacobi_entry(ring, i[v], j[t]));
          if (!(acc == LocalizedElement::in_ring(jacobi_entry(ring, i[v], j2[u]))))
            c.fail("the submatrix transport rule fails between " + j.str() + " and " +
                   j2.str());
        }
    }
  return c;
}

Check suite_reconstruction(const CoordinateRing& ring) {
  Check c;
  const JacobiData& d = jacobi_data(ring);
  const IndexTuple& i = d.pivot_rows;
  const IndexTuple& j = d.pivot_cols;
  Residue delta = minor_det(ring, i, j);
  std::vector<int> complement;
  for (int k = 0; k < ring.nvars(); ++k)
    if (!j.contains(k)) complement.push_back(k);
  std::mt19937 rng(314159u);
  for (int t = 0; t < 10; ++t) {
    std::map<int, Residue> values;
    for (int k : complement) values.emplace(k, delta * random_residue(ring, rng, 2));
    ReconstructResult res = reconstruct(ring, i, j, values);
    if (!res.derivation) {
      c.fail("a minor-scaled assignment fails to reconstruct at position " +
             std::to_string(res.failed_position));
      continue;
    }
    if (!in_natural_submodule(*res.derivation))
      c.fail("a reconstructed derivation lies outside the generated submodule");
    if (d.rows_r.size() > 1) {
      ReconstructResult other = reconstruct(ring, d.rows_r[1], j, values);
      if (!other.derivation || !(*other.derivation == *res.derivation))
        c.fail("reconstruction depends on the choice of row tuple");
    }
  }
  return c;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "rank-tuples",    "ideal-chain",        "dimension",
      "image-ideal",    "annihilation",       "relation-soundness",
      "presentation",   "minor-identities",   "reconstruction",
  };
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<SuiteResult> run_property_suites(const RingPtr& ring, const std::string& only) {
  if (!ring) throw Error("property suites need a ring");
  if (!only.empty() && !is_suite_name(only)) throw Error("unknown property suite: " + only);
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) {
    if (!only.empty() && name != only) continue;
    Check c;
    if (name == "rank-tuples")
      c = suite_rank_tuples(*ring);
    else if (name == "ideal-chain")
      c = suite_ideal_chain(*ring);
    else if (name == "dimension")
      c = suite_dimension(*ring);
    else if (name == "image-ideal")
      c = suite_image_ideal(*ring);
    else if (name == "annihilation")
      c = suite_annihilation(*ring);
    else if (name == "relation-soundness")
      c = suite_relation_soundness(*ring);
    else if (name == "presentation")
      c = suite_presentation(*ring);
    else if (name == "minor-identities")
      c = suite_minor_identities(*ring);
    else
      c = suite_reconstruction(*ring);
    out.push_back(SuiteResult{name, c.ok, c.detail});
  }
  return out;
}

}  // namespace diffop
