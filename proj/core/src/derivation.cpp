#include "diffop/derivation.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace diffop {

namespace {

void check_same_ring(const Derivation& a, const Derivation& b) {
  if (a.ring().get() != b.ring().get()) throw Error("derivations from different rings");
}

void check_in(const std::vector<IndexTuple>& sorted, const IndexTuple& t, const char* what) {
  if (!std::binary_search(sorted.begin(), sorted.end(), t))
    throw Error(std::string(what) + " tuple " + t.str() + " carries no nonzero top minor");
}

}  // namespace

Derivation::Derivation(RingPtr ring, std::vector<Residue> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (static_cast<int>(coeffs_.size()) != ring_->nvars())
    throw Error("derivation needs one coefficient per variable");
  for (const Residue& a : coeffs_)
    if (a.ring().get() != ring_.get()) throw Error("coefficient from a different ring");
}

bool Derivation::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Residue& a) { return a.is_zero(); });
}

Residue Derivation::apply(const Residue& a) const {
  if (a.ring().get() != ring_.get()) throw Error("argument from a different ring");
  Residue out = ring_->zero();
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    out += coeffs_[k] * ring_->project(a.rep().partial(static_cast<int>(k)));
  }
  return out;
}

Derivation Derivation::operator-() const {
  std::vector<Residue> out;
  out.reserve(coeffs_.size());
  for (const Residue& a : coeffs_) out.push_back(-a);
  return Derivation(ring_, std::move(out));
}

Derivation Derivation::times(const Residue& a) const {
  std::vector<Residue> out;
  out.reserve(coeffs_.size());
  for (const Residue& c : coeffs_) out.push_back(c * a);
  return Derivation(ring_, std::move(out));
}

Derivation Derivation::scaled(const Rational& c) const {
  std::vector<Residue> out;
  out.reserve(coeffs_.size());
  for (const Residue& a : coeffs_) out.push_back(a.scaled(c));
  return Derivation(ring_, std::move(out));
}

Derivation operator+(const Derivation& a, const Derivation& b) {
  check_same_ring(a, b);
  std::vector<Residue> out;
  out.reserve(a.coeffs_.size());
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out.push_back(a.coeffs_[k] + b.coeffs_[k]);
  return Derivation(a.ring_, std::move(out));
}

Derivation operator-(const Derivation& a, const Derivation& b) {
  check_same_ring(a, b);
  std::vector<Residue> out;
  out.reserve(a.coeffs_.size());
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out.push_back(a.coeffs_[k] - b.coeffs_[k]);
  return Derivation(a.ring_, std::move(out));
}

bool operator==(const Derivation& a, const Derivation& b) {
  check_same_ring(a, b);
  return a.coeffs_ == b.coeffs_;
}

std::string Derivation::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string var = "d/d" + ring_->variables()[k];
    if (coeffs_[k].is_one()) {
      out += var;
      continue;
    }
    const auto& terms = coeffs_[k].rep().terms();
    const bool simple = terms.size() == 1 && terms[0].coeff.sign() > 0;
    out += simple ? coeffs_[k].str() : "(" + coeffs_[k].str() + ")";
    out += "*" + var;
  }
  return out;
}

Derivation natural_derivation(const CoordinateRing& ring, const IndexTuple& i,
                              const IndexTuple& j) {
  const JacobiData& d = jacobi_data(ring);
  if (i.size() != d.r || j.size() != d.r + 1)
    throw Error("tuples must have sizes rank and rank+1");
  if (!i.empty() && i[i.size() - 1] >= ring.generator_count())
    throw Error("row index out of range");
  if (j[j.size() - 1] >= ring.nvars()) throw Error("column index out of range");

  std::vector<Residue> coeffs(static_cast<std::size_t>(ring.nvars()), ring.zero());
  for (int k = 0; k <= d.r; ++k) {
    Residue mv = minor_det(ring, i, j.erased(k));
    coeffs[static_cast<std::size_t>(j[k])] = ((d.r + k) % 2 == 0) ? mv : -mv;
  }
  return Derivation(ring.shared_from_this(), std::move(coeffs));
}

Derivation natural_derivation_listed(const CoordinateRing& ring, const IndexTuple& i,
                                     std::vector<int> cols) {
  const int sign = sort_tuple_sign(cols);
  if (sign < 0) {
    std::vector<Residue> zero(static_cast<std::size_t>(ring.nvars()), ring.zero());
    return Derivation(ring.shared_from_this(), std::move(zero));
  }
  Derivation d = natural_derivation(ring, i, IndexTuple(std::move(cols)));
  return sign == 0 ? d : -d;
}

const DerModuleData& der_module_data(const CoordinateRing& ring) {
  std::call_once(ring.dermod_once_, [&ring] {
    const JacobiData& d = jacobi_data(ring);
    const int n = ring.nvars();

    std::vector<DerModuleData::Gen> gens;
    for (const IndexTuple& i : d.rows_r)
      for (const IndexTuple& j : d.cols_r1) {
        Derivation del = natural_derivation(ring, i, j);
        std::vector<Polynomial> coeffs;
        coeffs.reserve(static_cast<std::size_t>(n));
        for (const Residue& a : del.coefficients()) coeffs.push_back(a.rep());
        gens.push_back({i, j, std::move(coeffs)});
      }

    std::vector<VectorPoly> module_gens;
    for (const DerModuleData::Gen& g : gens) module_gens.push_back(g.coeffs);
    for (int k = 0; k < n; ++k)
      for (const Polynomial& f : ring.gb().elements()) {
        VectorPoly v(static_cast<std::size_t>(n), Polynomial(n, ring.order()));
        v[static_cast<std::size_t>(k)] = f;
        module_gens.push_back(std::move(v));
      }

    ModuleBasis basis = module_buchberger(std::move(module_gens), n, n, ring.order());
    ring.dermod_ = std::make_unique<const DerModuleData>(
        DerModuleData{std::move(gens), std::move(basis)});
  });
  return *ring.dermod_;
}

std::vector<NaturalGenerator> natural_generators(const CoordinateRing& ring) {
  const DerModuleData& md = der_module_data(ring);
  std::vector<NaturalGenerator> out;
  out.reserve(md.generators.size());
  for (const DerModuleData::Gen& g : md.generators) {
    std::vector<Residue> coeffs;
    coeffs.reserve(g.coeffs.size());
    for (const Polynomial& p : g.coeffs) coeffs.push_back(ring.project(p));
    out.push_back({g.rows, g.cols, Derivation(ring.shared_from_this(), std::move(coeffs))});
  }
  return out;
}

bool is_derivation(const CoordinateRing& ring, const std::vector<Residue>& coeffs) {
  if (static_cast<int>(coeffs.size()) != ring.nvars())
    throw Error("derivation needs one coefficient per variable");
  const JacobiData& d = jacobi_data(ring);
  for (int i = 0; i < ring.generator_count(); ++i) {
    Residue sum = ring.zero();
    for (int j = 0; j < ring.nvars(); ++j) {
      if (coeffs[static_cast<std::size_t>(j)].is_zero()) continue;
      sum += ring.project(d.matrix.at(i, j)) * coeffs[static_cast<std::size_t>(j)];
    }
    if (!sum.is_zero()) return false;
  }
  return true;
}

bool in_natural_submodule(const Derivation& d) {
  const CoordinateRing& ring = *d.ring();
  if (!is_derivation(ring, d.coefficients()))
    throw Error("coefficient vector is not a derivation");
  const DerModuleData& md = der_module_data(ring);
  VectorPoly v;
  v.reserve(d.coefficients().size());
  for (const Residue& a : d.coefficients()) v.push_back(a.rep());
  return module_member(v, md.submodule);
}

ReconstructResult reconstruct(const CoordinateRing& ring, const IndexTuple& i,
                              const IndexTuple& j, const std::map<int, Residue>& values) {
  const JacobiData& d = jacobi_data(ring);
  check_in(d.rows_r, i, "row");
  check_in(d.cols_r, j, "column");

  std::vector<int> complement;
  for (int k = 0; k < ring.nvars(); ++k)
    if (!j.contains(k)) complement.push_back(k);
  if (static_cast<int>(values.size()) != static_cast<int>(complement.size()))
    throw Error("values must cover exactly the complement variables");
  for (int k : complement)
    if (!values.count(k))
      throw Error("missing value for variable " + ring.variables()[static_cast<std::size_t>(k)]);

  const Residue delta = minor_det(ring, i, j);
  std::vector<Residue> coeffs(static_cast<std::size_t>(ring.nvars()), ring.zero());
  for (int k : complement) coeffs[static_cast<std::size_t>(k)] = values.at(k);

  for (int v = 0; v < d.r; ++v) {
    Residue num = ring.zero();
    for (int k : complement) {
      std::vector<int> cols = j.indices();
      cols[static_cast<std::size_t>(v)] = k;
      num += values.at(k) * minor_general(ring, i.indices(), std::move(cols));
    }
    LocalizedElement elem(-num, delta, 1);
    auto w = elem.in_coordinate_ring();
    if (!w) return {std::nullopt, v, std::move(elem)};
    coeffs[static_cast<std::size_t>(j[v])] = *w;
  }

  if (!is_derivation(ring, coeffs))
    throw Error("reconstructed coefficients fail the derivation equations");
  return {Derivation(ring.shared_from_this(), std::move(coeffs)), -1, std::nullopt};
}

bool same_level_class(const HigherDerivation& a, const HigherDerivation& b) {
  if (a.ring.get() != b.ring.get() || a.s != b.s)
    throw Error("level classes from different settings");
  return a.coeffs == b.coeffs;
}

HigherDerivation higher_natural_derivation(const CoordinateRing& ring, int s,
                                           const IndexTuple& i, const IndexTuple& j) {
  const JacobiData& d = jacobi_data(ring);
  if (s < 1 || s > d.r) throw Error("level out of range");
  if (i.size() != s || j.size() != s + 1)
    throw Error("tuples must have sizes level and level+1");
  if (i[i.size() - 1] >= ring.generator_count()) throw Error("row index out of range");
  if (j[j.size() - 1] >= ring.nvars()) throw Error("column index out of range");

  GroebnerBasis modulus = (s == d.r) ? ring.gb() : jacobian_ideal(ring, s + 1).gb;
  std::vector<Polynomial> coeffs(static_cast<std::size_t>(ring.nvars()),
                                 Polynomial(ring.nvars(), ring.order()));
  for (int k = 0; k <= s; ++k) {
    Polynomial mv = minor_det(ring, i, j.erased(k)).rep();
    if ((s + k) % 2 != 0) mv = -mv;
    coeffs[static_cast<std::size_t>(j[k])] = normal_form(mv, modulus);
  }
  return {ring.shared_from_this(), s, i, j, std::move(coeffs), std::move(modulus)};
}

GroebnerBasis image_ideal(const CoordinateRing& ring) {
  const DerModuleData& md = der_module_data(ring);
  std::vector<Polynomial> gens = ring.gb().elements();
  for (const DerModuleData::Gen& g : md.generators)
    for (const Polynomial& p : g.coeffs)
      if (!p.is_zero()) gens.push_back(p);
  return buchberger(std::move(gens), ring.nvars(), ring.order());
}

}  // namespace diffop
