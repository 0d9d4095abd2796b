#include "diffop/jacobi.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace diffop {

IndexTuple::IndexTuple(std::vector<int> indices) : idx_(std::move(indices)) {
  for (std::size_t t = 0; t < idx_.size(); ++t) {
    if (idx_[t] < 0) throw Error("negative index in tuple");
    if (t > 0 && idx_[t] <= idx_[t - 1]) throw Error("index tuple not strictly increasing");
  }
}

bool IndexTuple::contains(int k) const {
  return std::binary_search(idx_.begin(), idx_.end(), k);
}

IndexTuple IndexTuple::erased(int pos) const {
  if (pos < 0 || pos >= size()) throw Error("tuple position out of range");
  std::vector<int> out = idx_;
  out.erase(out.begin() + pos);
  return IndexTuple(std::move(out));
}

std::string IndexTuple::str() const {
  std::string out = "(";
  for (std::size_t t = 0; t < idx_.size(); ++t) {
    if (t > 0) out += ",";
    out += std::to_string(idx_[t] + 1);
  }
  return out + ")";
}

std::vector<IndexTuple> tuples_of_size(int k, int bound) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > bound) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(IndexTuple(cur));
      return;
    }
    for (int v = start; v < bound; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

namespace {

Polynomial minor_poly(const JacobiData& d, const IndexTuple& i, const IndexTuple& j) {
  const CoordinateRing& ring = *d.ring;
  if (i.size() != j.size()) throw Error("minor with mismatched tuple sizes");
  const int k = i.size();
  if (k == 0) return Polynomial::constant(ring.nvars(), ring.order(), Rational(1));
  auto key = std::make_pair(i, j);
  if (auto it = d.minor_cache.find(key); it != d.minor_cache.end()) return it->second;
  Matrix<Polynomial> sub(k, k, Polynomial(ring.nvars(), ring.order()));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) sub.at(a, b) = d.matrix.at(i[a], j[b]);
  Polynomial det = normal_form(determinant(sub), ring.gb());
  d.minor_cache.emplace(std::move(key), det);
  return det;
}

std::vector<int> with_inserted(const std::vector<int>& v, int k) {
  std::vector<int> out = v;
  out.insert(std::lower_bound(out.begin(), out.end(), k), k);
  return out;
}

void compute_rank(JacobiData& d) {
  const int m = d.matrix.rows();
  const int n = d.matrix.cols();
  std::vector<int> wr, wc;
  int r = 0;
  while (r + 1 <= m && r + 1 <= n) {
    const int k = r + 1;
    bool found = false;
    for (int a = 0; a < m && !found; ++a) {
      if (std::binary_search(wr.begin(), wr.end(), a)) continue;
      for (int b = 0; b < n && !found; ++b) {
        if (std::binary_search(wc.begin(), wc.end(), b)) continue;
        std::vector<int> rows2 = with_inserted(wr, a);
        std::vector<int> cols2 = with_inserted(wc, b);
        if (!minor_poly(d, IndexTuple(rows2), IndexTuple(cols2)).is_zero()) {
          wr = std::move(rows2);
          wc = std::move(cols2);
          found = true;
        }
      }
    }
    if (!found) {
      // the witness may not extend even though the rank grows; sweep size k
      for (const IndexTuple& i : tuples_of_size(k, m)) {
        for (const IndexTuple& j : tuples_of_size(k, n)) {
          if (!minor_poly(d, i, j).is_zero()) {
            wr = i.indices();
            wc = j.indices();
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    if (!found) break;
    r = k;
  }
  d.r = r;

  const IndexTuple iw(wr), jw(wc);
  // one nonzero top minor pins both tuple sets: a row tuple carries a nonzero
  // minor against jw exactly when it carries one at all, and likewise for
  // columns against iw
  for (const IndexTuple& t : tuples_of_size(r, m))
    if (!minor_poly(d, t, jw).is_zero()) d.rows_r.push_back(t);
  for (const IndexTuple& t : tuples_of_size(r, n))
    if (!minor_poly(d, iw, t).is_zero()) d.cols_r.push_back(t);
  const std::set<IndexTuple> colset(d.cols_r.begin(), d.cols_r.end());
  for (const IndexTuple& t : tuples_of_size(r + 1, n)) {
    for (int v = 0; v <= r; ++v) {
      if (colset.count(t.erased(v))) {
        d.cols_r1.push_back(t);
        break;
      }
    }
  }
  d.pivot_rows = d.rows_r.front();
  d.pivot_cols = d.cols_r.front();
}

int scalar_rank(std::vector<std::vector<Rational>> mat) {
  const int rows = static_cast<int>(mat.size());
  const int cols = rows ? static_cast<int>(mat[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int row = rank; row < rows; ++row)
      if (!mat[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    for (int row = rank + 1; row < rows; ++row) {
      if (mat[row][col].is_zero()) continue;
      const Rational factor = mat[row][col] / mat[rank][col];
      for (int c2 = col; c2 < cols; ++c2) mat[row][c2] = mat[row][c2] - factor * mat[rank][c2];
    }
    ++rank;
  }
  return rank;
}

void check_top_row(const JacobiData& d, const IndexTuple& i) {
  if (!std::binary_search(d.rows_r.begin(), d.rows_r.end(), i))
    throw Error("row tuple " + i.str() + " carries no nonzero top minor");
}

void check_top_col(const JacobiData& d, const IndexTuple& j) {
  if (!std::binary_search(d.cols_r.begin(), d.cols_r.end(), j))
    throw Error("column tuple " + j.str() + " carries no nonzero top minor");
}

}  // namespace

int sort_tuple_sign(std::vector<int>& v) {
  int swaps = 0;
  for (std::size_t a = 1; a < v.size(); ++a)
    for (std::size_t b = a; b > 0 && v[b] < v[b - 1]; --b) {
      std::swap(v[b], v[b - 1]);
      ++swaps;
    }
  for (std::size_t a = 1; a < v.size(); ++a)
    if (v[a] == v[a - 1]) return -1;
  return swaps % 2;
}

const JacobiData& jacobi_data(const CoordinateRing& ring) {
  std::call_once(ring.jacobi_once_, [&ring] {
    const int m = ring.generator_count();
    const int n = ring.nvars();
    auto d = std::make_unique<JacobiData>(
        JacobiData{&ring, Matrix<Polynomial>(m, n, Polynomial(n, ring.order())), 0,
                   {}, {}, {}, {}, {}, {}});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        d->matrix.at(i, j) = normal_form(ring.generators()[i].partial(j), ring.gb());
    compute_rank(*d);
    ring.jacobi_ = std::move(d);
  });
  return *ring.jacobi_;
}

Residue jacobi_entry(const CoordinateRing& ring, int i, int j) {
  const JacobiData& d = jacobi_data(ring);
  return ring.project(d.matrix.at(i, j));
}

int rank(const CoordinateRing& ring) { return jacobi_data(ring).r; }

Residue minor_det(const CoordinateRing& ring, const IndexTuple& i, const IndexTuple& j) {
  const JacobiData& d = jacobi_data(ring);
  if (!i.empty() && i[i.size() - 1] >= d.matrix.rows()) throw Error("row index out of range");
  if (!j.empty() && j[j.size() - 1] >= d.matrix.cols()) throw Error("column index out of range");
  return ring.project(minor_poly(d, i, j));
}

Residue minor_general(const CoordinateRing& ring, std::vector<int> rows, std::vector<int> cols) {
  if (rows.size() != cols.size()) throw Error("minor with mismatched tuple sizes");
  const int sr = sort_tuple_sign(rows);
  const int sc = sort_tuple_sign(cols);
  if (sr < 0 || sc < 0) return ring.zero();
  Residue value = minor_det(ring, IndexTuple(std::move(rows)), IndexTuple(std::move(cols)));
  return ((sr + sc) % 2 == 0) ? value : -value;
}

const JacobianIdeal& jacobian_ideal(const CoordinateRing& ring, int k) {
  const JacobiData& d = jacobi_data(ring);
  if (k < 0 || k > d.r) throw Error("minor size out of range");
  if (auto it = ring.ideal_cache_.find(k); it != ring.ideal_cache_.end()) return *it->second;

  std::vector<Polynomial> minors;
  if (k == 0) {
    minors.push_back(Polynomial::constant(ring.nvars(), ring.order(), Rational(1)));
  } else {
    for (const IndexTuple& i : tuples_of_size(k, d.matrix.rows()))
      for (const IndexTuple& j : tuples_of_size(k, d.matrix.cols())) {
        Polynomial p = minor_poly(d, i, j);
        if (!p.is_zero()) minors.push_back(std::move(p));
      }
  }
  std::vector<Polynomial> gens = minors;
  gens.insert(gens.end(), ring.gb().elements().begin(), ring.gb().elements().end());
  auto ideal = std::make_unique<JacobianIdeal>(
      JacobianIdeal{k, std::move(minors), buchberger(std::move(gens), ring.nvars(), ring.order())});
  auto [pos, inserted] = ring.ideal_cache_.emplace(k, std::move(ideal));
  (void)inserted;
  return *pos->second;
}

bool is_smooth(const CoordinateRing& ring) {
  return jacobian_ideal(ring, jacobi_data(ring).r).gb.is_unit();
}

PointReport point_report(const CoordinateRing& ring, const std::vector<Rational>& c) {
  if (static_cast<int>(c.size()) != ring.nvars()) throw Error("point has wrong coordinate count");
  const JacobiData& d = jacobi_data(ring);

  bool on = true;
  for (const Polynomial& f : ring.generators())
    if (!f.evaluate(c).is_zero()) {
      on = false;
      break;
    }

  bool singular = true;
  for (const Polynomial& g : jacobian_ideal(ring, d.r).minors)
    if (!g.evaluate(c).is_zero()) {
      singular = false;
      break;
    }

  std::vector<std::vector<Rational>> scalar(
      static_cast<std::size_t>(d.matrix.rows()),
      std::vector<Rational>(static_cast<std::size_t>(d.matrix.cols()), Rational(0)));
  for (int i = 0; i < d.matrix.rows(); ++i)
    for (int j = 0; j < d.matrix.cols(); ++j) scalar[i][j] = d.matrix.at(i, j).evaluate(c);

  return {on, singular, ring.nvars() - scalar_rank(std::move(scalar))};
}

bool verify_minor_identity(const CoordinateRing& ring, const IndexTuple& i,
                           const IndexTuple& i2, const IndexTuple& j, const IndexTuple& j2) {
  const JacobiData& d = jacobi_data(ring);
  check_top_row(d, i);
  check_top_row(d, i2);
  check_top_col(d, j);
  check_top_col(d, j2);
  return minor_det(ring, i2, j2) * minor_det(ring, i, j) ==
         minor_det(ring, i2, j) * minor_det(ring, i, j2);
}

Matrix<LocalizedElement> change_of_basis(const CoordinateRing& ring, const IndexTuple& i,
                                         const IndexTuple& j, const IndexTuple& j2) {
  const JacobiData& d = jacobi_data(ring);
  check_top_row(d, i);
  check_top_col(d, j);
  check_top_col(d, j2);
  const Residue delta = minor_det(ring, i, j);
  Matrix<LocalizedElement> h(d.r, d.r, LocalizedElement(ring.zero(), delta, 1));
  for (int v = 0; v < d.r; ++v)
    for (int u = 0; u < d.r; ++u) {
      std::vector<int> cols = j.indices();
      cols[static_cast<std::size_t>(v)] = j2[u];
      h.at(v, u) = LocalizedElement(minor_general(ring, i.indices(), std::move(cols)), delta, 1);
    }
  return h;
}

}  // namespace diffop
