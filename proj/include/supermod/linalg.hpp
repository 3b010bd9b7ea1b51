// Copyright 2026 The supermod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SUPERMOD_LINALG_HPP_
#define SUPERMOD_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "supermod/errors.hpp"
#include "supermod/rational.hpp"

namespace supermod {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i].assign(a[i].begin(), a[i].end());
  return out;
}

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rat inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix a) { return rref(a).size(); }

inline std::size_t rank(const IntMatrix& a) { return rank(to_rational(a)); }

// Basis of the right nullspace {x : a x = 0}, one vector per free column.
inline std::vector<RatVec> nullspace(RatMatrix a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  std::vector<std::size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of a square system; nullopt when the matrix is singular.
inline std::optional<RatVec> solve_square(RatMatrix a, RatVec b) {
  std::size_t n = a.size();
  if (n == 0) return RatVec{};
  if (a[0].size() != n || b.size() != n) throw DimensionMismatch();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a);
  if (pivots.size() != n || pivots.back() == n) return std::nullopt;
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

// Whether a x = b has any solution (rank test on the augmented matrix).
inline bool is_solvable(const RatMatrix& a, const RatVec& b) {
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  return rank(a) == rank(std::move(aug));
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace supermod

#endif  // SUPERMOD_LINALG_HPP_
