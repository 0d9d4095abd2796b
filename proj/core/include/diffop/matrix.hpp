#pragma once

// Dense matrices over an arbitrary exact coefficient ring, and determinants
// by cofactor expansion memoized over column subsets (one subproblem per
// subset of active columns instead of one per permutation).

#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "diffop/error.hpp"

namespace diffop {

inline constexpr int kDeterminantSizeBound = 8;

template <typename T>
class Matrix {
 public:
  Matrix(int rows, int cols, const T& fill)
      : rows_(checked(rows)),
        cols_(checked(cols)),
        cells_(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return cells_[index(i, j)]; }
  const T& at(int i, int j) const { return cells_[index(i, j)]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  static int checked(int d) {
    if (d < 0) throw Error("negative matrix dimensions");
    return d;
  }
  std::size_t index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw Error("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(j);
  }
  int rows_;
  int cols_;
  std::vector<T> cells_;
};

// Requires T to support +, -, * and copying. Size must be between 1 and
// kDeterminantSizeBound.
template <typename T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const int n = m.rows();
  if (n < 1) throw Error("determinant of an empty matrix");
  if (n > kDeterminantSizeBound) throw Error("determinant size above bound");

  std::unordered_map<std::uint32_t, T> memo;
  // Determinant of the block on rows [n - |mask|, n) and the columns in mask.
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int k = std::popcount(mask);
    const int row = n - k;
    std::optional<T> acc;
    int t = 0;
    for (int j = 0; j < n; ++j) {
      if (!((mask >> j) & 1u)) continue;
      T term = (k == 1) ? m.at(row, j)
                        : m.at(row, j) * self(self, mask ^ (1u << j));
      if (!acc)
        acc = std::move(term);
      else if (t % 2 == 1)
        *acc = *acc - term;
      else
        *acc = *acc + term;
      ++t;
    }
    memo.emplace(mask, *acc);
    return *acc;
  };
  return rec(rec, (std::uint32_t{1} << n) - 1u);
}

}  // namespace diffop
