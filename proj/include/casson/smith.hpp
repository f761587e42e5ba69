#pragma once

#include <cstddef>
#include <vector>

#include "casson/abelian.hpp"
#include "casson/checked.hpp"

namespace casson {

/// Integer matrix with row-major storage. Rows are relations, columns are
/// generators; smith_normal_form computes the cokernel.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (rows == 0 || cols == 0)
      throw std::domain_error("IntMatrix: dimensions must be >= 1");
  }

  IntMatrix(std::initializer_list<std::initializer_list<int64>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
      throw std::domain_error("IntMatrix: dimensions must be >= 1");
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::domain_error("IntMatrix: ragged rows");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int64& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  int64 at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<int64> entries_;
};

/// Smith normal form by elementary row/column reduction, pivoting on the
/// smallest nonzero entry. Matrices here are tiny (presentation matrices of
/// three-generator groups), but entries can grow during reduction, so all
/// arithmetic is overflow-checked.
///
/// Returns the cokernel Z^cols / (row space) in canonical invariant-factor
/// form; a 0 factor denotes an infinite cyclic summand.
inline AbelianGroup smith_normal_form(IntMatrix m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<int64> diag;
  std::size_t top = 0;

  auto row_op = [&](std::size_t dst, std::size_t src, int64 k) {
    for (std::size_t j = top; j < nc; ++j)
      m.at(dst, j) = checked_sub(m.at(dst, j), checked_mul(k, m.at(src, j)));
  };
  auto col_op = [&](std::size_t dst, std::size_t src, int64 k) {
    for (std::size_t i = top; i < nr; ++i)
      m.at(i, dst) = checked_sub(m.at(i, dst), checked_mul(k, m.at(i, src)));
  };

  while (top < nr && top < nc) {
    // locate smallest nonzero entry in the active block
    std::size_t pi = top, pj = top;
    int64 best = 0;
    for (std::size_t i = top; i < nr; ++i)
      for (std::size_t j = top; j < nc; ++j) {
        int64 v = checked_abs(m.at(i, j));
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best == 0) break;  // active block is zero

    // move pivot to (top, top)
    if (pi != top)
      for (std::size_t j = 0; j < nc; ++j)
        std::swap(m.at(pi, j), m.at(top, j));
    if (pj != top)
      for (std::size_t i = 0; i < nr; ++i)
        std::swap(m.at(i, pj), m.at(i, top));

    // clear the pivot row and column; restart whenever a remainder shrinks
    bool clean = true;
    for (std::size_t i = top + 1; i < nr; ++i) {
      int64 k = m.at(i, top) / m.at(top, top);
      if (k != 0) row_op(i, top, k);
      if (m.at(i, top) != 0) clean = false;
    }
    for (std::size_t j = top + 1; j < nc; ++j) {
      int64 k = m.at(top, j) / m.at(top, top);
      if (k != 0) col_op(j, top, k);
      if (m.at(top, j) != 0) clean = false;
    }
    if (!clean) continue;  // nonzero remainders become the next, smaller pivot

    // pivot must divide every remaining entry for the divisibility chain;
    // if not, fold the offending row in and reduce again
    int64 p = checked_abs(m.at(top, top));
    bool divides = true;
    for (std::size_t i = top + 1; i < nr && divides; ++i)
      for (std::size_t j = top + 1; j < nc && divides; ++j)
        if (m.at(i, j) % p != 0) {
          row_op(top, i, -1);
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(p);
    ++top;
  }

  std::vector<int64> factors = diag;
  const std::size_t free_rank = nc - diag.size();
  factors.insert(factors.end(), free_rank, 0);
  return AbelianGroup::from_factors(std::move(factors));
}

}  // namespace casson
