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

#ifndef SUPERMOD_CONE_HPP_
#define SUPERMOD_CONE_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <utility>
#include <vector>

#include "supermod/linalg.hpp"
#include "supermod/rational.hpp"

namespace supermod {

// H-representation of a polyhedral cone: {x : E x = 0, A x >= 0}.
struct ConeH {
  int dim = 0;
  RatMatrix inequalities;  // rows a with a.x >= 0
  RatMatrix equalities;    // rows a with a.x == 0
};

// An extreme ray: primitive integer direction plus the indices of the
// inequalities it satisfies with equality.
struct Ray {
  IntVec direction;
  std::vector<int> tight;
};

struct DDOptions {
  int threads = 1;
  // Re-checks that every output ray's tight set has rank dim-1.
  bool verify = true;
};

namespace detail {

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

inline int sgn_int(const Int& x) { return sgn(x); }

using Bits = std::vector<std::uint64_t>;

inline bool bits_subset(const Bits& small, const Bits& big) {
  for (std::size_t w = 0; w < small.size(); ++w)
    if ((small[w] & ~big[w]) != 0) return false;
  return true;
}

inline int bits_count_and(const Bits& a, const Bits& b) {
  int c = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    c += std::popcount(a[w] & b[w]);
  return c;
}

struct DDRay {
  IntVec dir;
  Bits zero;
};

inline Int dot(const IntVec& row, const IntVec& x) {
  Int s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) s += row[i] * x[i];
  return s;
}

// Sparse inequality row: index/value pairs of the nonzero entries.
struct SparseRow {
  std::vector<std::pair<int, Int>> nz;
  static SparseRow from(const IntVec& row) {
    SparseRow s;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) s.nz.emplace_back(static_cast<int>(i), row[i]);
    return s;
  }
  Int dot(const IntVec& x) const {
    Int s = 0;
    for (const auto& [i, v] : nz) s += v * x[i];
    return s;
  }
};

// Runs fn(begin, end) over [0, total) split into contiguous chunks, one per
// worker. Results are merged by chunk order by the caller.
template <typename Fn>
void parallel_chunks(std::size_t total, int threads, Fn fn) {
  if (threads <= 1 || total < 512) {
    fn(std::size_t{0}, total, 0);
    return;
  }
  int workers = std::min<std::size_t>(threads, total);
  std::vector<std::thread> pool;
  std::size_t per = (total + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    std::size_t begin = t * per, end = std::min(total, begin + per);
    if (begin >= end) break;
    pool.emplace_back([=] { fn(begin, end, t); });
  }
  for (auto& th : pool) th.join();
}

// Double description over a pointed, full-rank inequality system.
// `rows` are primitive integer rows; `active` lists indices of nonzero rows.
inline std::vector<DDRay> double_description(int dim, const IntMatrix& rows,
                                             const std::vector<int>& active,
                                             int threads) {
  std::size_t words = (rows.size() + 63) / 64;
  auto bit_of = [&](Bits& b, int i) { b[i / 64] |= std::uint64_t{1} << (i % 64); };

  // Greedy linearly independent subset of the active rows.
  std::vector<int> basis;
  {
    RatMatrix elim;
    for (int idx : active) {
      RatMatrix trial = elim;
      trial.emplace_back(rows[idx].begin(), rows[idx].end());
      if (rank(trial) > elim.size()) {
        elim = std::move(trial);
        rref(elim);
        basis.push_back(idx);
        if (static_cast<int>(basis.size()) == dim) break;
      }
    }
  }
  if (static_cast<int>(basis.size()) != dim)
    throw NotPointed("inequality system has rank below the ambient dimension");

  // Initial simplicial cone: rays r_i with A_basis r_i = c_i e_i, c_i > 0.
  std::vector<DDRay> rays;
  {
    RatMatrix ab(dim, RatVec(2 * dim, Rat(0)));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) ab[i][j] = Rat(rows[basis[i]][j]);
      ab[i][dim + i] = 1;
    }
    rref(ab);
    for (int i = 0; i < dim; ++i) {
      RatVec col(dim);
      for (int j = 0; j < dim; ++j) col[j] = ab[j][dim + i];
      DDRay r;
      r.dir = primitive_integer_form(col);
      // Orient into the cone: row i must evaluate positive.
      if (dot(rows[basis[i]], r.dir) < 0)
        for (Int& x : r.dir) x = -x;
      r.zero.assign(words, 0);
      for (int k = 0; k < dim; ++k)
        if (k != i) bit_of(r.zero, basis[k]);
      rays.push_back(std::move(r));
    }
  }

  std::vector<bool> processed(rows.size(), false);
  for (int idx : basis) processed[idx] = true;
  std::vector<int> remaining;
  for (int idx : active)
    if (!processed[idx]) remaining.push_back(idx);
  std::vector<SparseRow> sparse(rows.size());
  for (int idx : active) sparse[idx] = SparseRow::from(rows[idx]);

  auto split_score = [&](int idx) {
    // Balance of the +/- split, estimated on a sample when the ray list is
    // large. Used only to pick the insertion order.
    std::size_t stride = std::max<std::size_t>(1, rays.size() / 4096);
    long pos = 0, neg = 0;
    for (std::size_t i = 0; i < rays.size(); i += stride) {
      int sgn = sgn_int(sparse[idx].dot(rays[i].dir));
      if (sgn > 0) ++pos;
      else if (sgn < 0) ++neg;
    }
    return std::make_pair(std::labs(pos - neg), idx);
  };

  while (!remaining.empty()) {
    // Most-balanced split first.
    auto best = remaining.begin();
    auto best_score = split_score(*best);
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      auto sc = split_score(*it);
      if (sc < best_score) {
        best = it;
        best_score = sc;
      }
    }
    int row_idx = *best;
    remaining.erase(best);

    std::vector<Int> vals(rays.size());
    std::vector<signed char> sign(rays.size());
    parallel_chunks(rays.size(), threads, [&](std::size_t b, std::size_t e, int) {
      for (std::size_t i = b; i < e; ++i) {
        vals[i] = sparse[row_idx].dot(rays[i].dir);
        sign[i] = static_cast<signed char>(sgn_int(vals[i]));
      }
    });

    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (sign[i] > 0) pos.push_back(i);
      else if (sign[i] < 0) neg.push_back(i);
      else bit_of(rays[i].zero, row_idx);
    }
    processed[row_idx] = true;
    if (neg.empty()) continue;

    // Per-row bitsets over the current ray list: tight_on[k] has bit i set
    // when ray i is tight on row k. Lets the adjacency test intersect a few
    // row sets instead of scanning every ray.
    std::size_t ray_words = (rays.size() + 63) / 64;
    std::vector<Bits> tight_on(rows.size());
    for (std::size_t k = 0; k < rows.size(); ++k)
      tight_on[k].assign(ray_words, 0);
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = rays[i].zero[w];
        while (word != 0) {
          int b = std::countr_zero(word);
          word &= word - 1;
          tight_on[64 * w + b][i / 64] |= std::uint64_t{1} << (i % 64);
        }
      }

    // New rays from adjacent (+,-) pairs. Adjacency: the common zero set has
    // at least dim-2 members and is contained in no third ray's zero set,
    // i.e. the intersection of the tight_on sets over the common rows is
    // exactly {p, q}.
    std::vector<std::vector<DDRay>> fresh(std::max<std::size_t>(1, pos.size()));
    parallel_chunks(pos.size(), threads, [&](std::size_t b, std::size_t e, int) {
      Bits buf(ray_words);
      std::vector<int> live;  // nonzero word indices of buf
      for (std::size_t pi = b; pi < e; ++pi) {
        std::size_t p = pos[pi];
        for (std::size_t q : neg) {
          if (bits_count_and(rays[p].zero, rays[q].zero) < dim - 2) continue;
          Bits common(words);
          std::vector<int> rows_common;
          for (std::size_t w = 0; w < words; ++w) {
            common[w] = rays[p].zero[w] & rays[q].zero[w];
            std::uint64_t word = common[w];
            while (word != 0) {
              int bit = std::countr_zero(word);
              word &= word - 1;
              rows_common.push_back(static_cast<int>(64 * w) + bit);
            }
          }
          bool adjacent;
          if (rows_common.size() < 2) {
            // Too few common rows to index; scan the rays directly.
            adjacent = true;
            for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
              if (r == p || r == q) continue;
              if (bits_subset(common, rays[r].zero)) adjacent = false;
            }
          } else {
            const Bits& first = tight_on[rows_common[0]];
            const Bits& second = tight_on[rows_common[1]];
            live.clear();
            for (std::size_t w = 0; w < ray_words; ++w) {
              buf[w] = first[w] & second[w];
              if (buf[w] != 0) live.push_back(static_cast<int>(w));
            }
            for (std::size_t c = 2; c < rows_common.size(); ++c) {
              const Bits& row_set = tight_on[rows_common[c]];
              std::size_t kept = 0;
              for (int w : live) {
                buf[w] &= row_set[w];
                if (buf[w] != 0) live[kept++] = w;
              }
              live.resize(kept);
            }
            // Rays p and q are tight on every common row, so the
            // intersection always holds both; adjacency means nothing else.
            int members = 0;
            for (int w : live) members += std::popcount(buf[w]);
            adjacent = members == 2;
          }
          if (!adjacent) continue;
          DDRay nr;
          nr.dir.resize(dim);
          for (int j = 0; j < dim; ++j)
            nr.dir[j] = vals[p] * rays[q].dir[j] - vals[q] * rays[p].dir[j];
          make_primitive(nr.dir);
          nr.zero = std::move(common);
          bit_of(nr.zero, row_idx);
          fresh[pi].push_back(std::move(nr));
        }
      }
    });

    std::vector<DDRay> next;
    next.reserve(pos.size() + rays.size() - pos.size() - neg.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (sign[i] >= 0) next.push_back(std::move(rays[i]));
    for (auto& chunk : fresh)
      for (auto& r : chunk) next.push_back(std::move(r));
    rays = std::move(next);
  }

  std::sort(rays.begin(), rays.end(),
            [](const DDRay& a, const DDRay& b) { return lex_less(a.dir, b.dir); });
  return rays;
}

}  // namespace detail

// Enumerates the extreme rays of a pointed cone given in H-representation.
// Output is complete, duplicate free, and sorted lexicographically by
// direction. Throws NotPointed when the cone has a nontrivial lineality
// space after restricting to the equalities.
inline std::vector<Ray> extreme_rays(const ConeH& cone, DDOptions opts = {}) {
  for (const auto& row : cone.inequalities)
    if (static_cast<int>(row.size()) != cone.dim) throw DimensionMismatch();
  for (const auto& row : cone.equalities)
    if (static_cast<int>(row.size()) != cone.dim) throw DimensionMismatch();

  // Restrict to the equality subspace: x = B y with B a nullspace basis.
  std::vector<RatVec> basis;
  int dim = cone.dim;
  bool projected = !cone.equalities.empty();
  if (projected) {
    basis = nullspace(cone.equalities);
    dim = static_cast<int>(basis.size());
  }

  // Primitive integer inequality rows in the working coordinates.
  IntMatrix rows;
  std::vector<int> active;
  std::vector<int> zero_rows;
  for (std::size_t i = 0; i < cone.inequalities.size(); ++i) {
    RatVec row;
    if (projected) {
      row.resize(dim);
      for (int j = 0; j < dim; ++j) {
        Rat s = 0;
        for (int k = 0; k < cone.dim; ++k)
          s += cone.inequalities[i][k] * basis[j][k];
        row[j] = s;
      }
    } else {
      row = cone.inequalities[i];
    }
    bool all_zero = std::all_of(row.begin(), row.end(),
                                [](const Rat& x) { return x == 0; });
    if (all_zero) {
      rows.emplace_back(dim, Int(0));
      zero_rows.push_back(static_cast<int>(i));
    } else {
      rows.push_back(primitive_integer_form(row));
      active.push_back(static_cast<int>(i));
    }
  }
  if (dim == 0) return {};

  std::vector<detail::DDRay> dd =
      detail::double_description(dim, rows, active, opts.threads);

  std::vector<Ray> out;
  out.reserve(dd.size());
  for (const detail::DDRay& r : dd) {
    Ray ray;
    if (projected) {
      RatVec x(cone.dim, Rat(0));
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < cone.dim; ++k) x[k] += Rat(r.dir[j]) * basis[j][k];
      ray.direction = primitive_integer_form(x);
    } else {
      ray.direction = r.dir;
    }
    for (int i : active)
      if ((r.zero[i / 64] >> (i % 64)) & 1) ray.tight.push_back(i);
    ray.tight.insert(ray.tight.end(), zero_rows.begin(), zero_rows.end());
    std::sort(ray.tight.begin(), ray.tight.end());
    out.push_back(std::move(ray));
  }
  if (projected)
    std::sort(out.begin(), out.end(), [](const Ray& a, const Ray& b) {
      return detail::lex_less(a.direction, b.direction);
    });

  if (opts.verify) {
    // Each tight set must have rank dim-1 in the working coordinates, and
    // rays must be pairwise distinct.
    std::vector<char> ok(std::max<std::size_t>(1, dd.size()), 1);
    detail::parallel_chunks(dd.size(), opts.threads,
                            [&](std::size_t b, std::size_t e, int) {
      for (std::size_t i = b; i < e; ++i) {
        IntMatrix tight_rows;
        for (int k : active)
          if ((dd[i].zero[k / 64] >> (k % 64)) & 1) tight_rows.push_back(rows[k]);
        if (rank(tight_rows) != static_cast<std::size_t>(dim) - 1) ok[i] = 0;
      }
    });
    for (std::size_t i = 0; i < dd.size(); ++i)
      if (!ok[i]) throw Error("extreme ray with deficient tight set rank");
    for (std::size_t i = 1; i < out.size(); ++i)
      if (out[i].direction == out[i - 1].direction)
        throw Error("duplicate extreme ray");
  }
  return out;
}

}  // namespace supermod

#endif  // SUPERMOD_CONE_HPP_
