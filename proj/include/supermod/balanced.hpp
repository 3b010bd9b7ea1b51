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

#ifndef SUPERMOD_BALANCED_HPP_
#define SUPERMOD_BALANCED_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "supermod/cone.hpp"
#include "supermod/linalg.hpp"
#include "supermod/random.hpp"
#include "supermod/subsets.hpp"

namespace supermod {

// Nonnegative rational vector indexed by the nonempty subsets of [N].
class BalancedVector {
 public:
  explicit BalancedVector(int n)
      : n_(n), entries_(std::size_t{1} << n, Rat(0)) {
    check_ground_set(n);
  }

  int n() const { return n_; }
  const Rat& entry(SubsetMask s) const { return entries_[s]; }
  Rat& entry(SubsetMask s) {
    if (s == 0) throw ElementOutOfRange("empty set has no entry");
    return entries_[s];
  }

  std::vector<SubsetMask> support() const {
    std::vector<SubsetMask> out;
    for (SubsetMask s : canonical_subsets(n_))
      if (s != 0 && entries_[s] != 0) out.push_back(s);
    return out;
  }

  bool is_zero() const { return support().empty(); }

  void require_nonnegative() const {
    for (const Rat& e : entries_)
      if (e < 0) throw Error("balanced vector with negative entry");
  }

  // Weighted incidence of one element.
  Rat incidence(int element) const {
    Rat total = 0;
    for (SubsetMask s = 1; s < entries_.size(); ++s)
      if (contains(s, element)) total += entries_[s];
    return total;
  }

  // Entries in canonical subset order (nonempty sets only).
  std::vector<Rat> canonical_entries() const {
    std::vector<Rat> out;
    for (SubsetMask s : canonical_subsets(n_))
      if (s != 0) out.push_back(entries_[s]);
    return out;
  }

  friend bool operator==(const BalancedVector&, const BalancedVector&) = default;
  friend bool operator<(const BalancedVector& a, const BalancedVector& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.canonical_entries() < b.canonical_entries();
  }

 private:
  int n_;
  std::vector<Rat> entries_;
};

// Multiset of nonempty subsets of [N], stored as multiplicities.
class SubsetMultiset {
 public:
  explicit SubsetMultiset(int n) : n_(n) { check_ground_set(n); }

  int n() const { return n_; }
  void add(SubsetMask s, long count = 1) {
    if (s == 0) throw ElementOutOfRange("empty set not allowed in multiset");
    if (count > 0) counts_[s] += count;
  }
  const std::map<SubsetMask, long>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  BalancedVector to_vector() const {
    BalancedVector v(n_);
    for (const auto& [s, c] : counts_) v.entry(s) = Rat(c);
    return v;
  }

 private:
  int n_;
  std::map<SubsetMask, long> counts_;
};

// The common incidence m when every element is covered the same amount.
inline std::optional<Rat> balance_of(const BalancedVector& v) {
  v.require_nonnegative();
  if (v.n() == 0) return Rat(0);
  Rat m = v.incidence(1);
  for (int i = 2; i <= v.n(); ++i)
    if (v.incidence(i) != m) return std::nullopt;
  return m;
}

// Complexity of a nonzero balanced vector: the incidence count after scaling
// to primitive integer entries.
inline Int complexity_of_balanced(const BalancedVector& v) {
  if (v.is_zero()) throw ZeroVector();
  if (!balance_of(v)) throw Unbalanced();
  std::vector<Rat> ent = v.canonical_entries();
  Rat c = primitive_scale(ent);
  Rat m = v.incidence(1) * c;
  if (m.get_den() != 1) throw Error("non-integer complexity");
  return m.get_num();
}

// Indicator columns of the support as an N x l matrix.
inline RatMatrix support_matrix(int n, const std::vector<SubsetMask>& sets) {
  RatMatrix a(n, RatVec(sets.size(), Rat(0)));
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (int i : elements_of(sets[j])) a[i - 1][j] = 1;
  return a;
}

inline bool support_independent(const BalancedVector& v) {
  std::vector<SubsetMask> sup = v.support();
  return rank(support_matrix(v.n(), sup)) == sup.size();
}

struct BalancedCertificate {
  bool irreducible = false;
  bool support_independent = false;
  std::size_t support_size = 0;
  std::size_t system_rank = 0;    // rank of the balance system on the support
  std::size_t solution_dim = 0;   // dimension of {(u, m') : balanced on support}
};

// Extreme-ray test: the balanced vectors supported inside supp(v) must form
// a line.
inline BalancedCertificate is_irreducible_balanced(const BalancedVector& v) {
  if (v.is_zero()) throw ZeroVector();
  if (!balance_of(v)) throw Unbalanced();
  std::vector<SubsetMask> sup = v.support();
  BalancedCertificate cert;
  cert.support_size = sup.size();
  cert.support_independent =
      rank(support_matrix(v.n(), sup)) == sup.size();
  // Variables (u_1..u_l, m'); equations sum_{S ni i} u_S - m' = 0.
  RatMatrix sys(v.n(), RatVec(sup.size() + 1, Rat(0)));
  for (std::size_t j = 0; j < sup.size(); ++j)
    for (int i : elements_of(sup[j])) sys[i - 1][j] = 1;
  for (int i = 0; i < v.n(); ++i) sys[i][sup.size()] = -1;
  cert.system_rank = rank(std::move(sys));
  cert.solution_dim = sup.size() + 1 - cert.system_rank;
  cert.irreducible = cert.solution_dim == 1;
  return cert;
}

// Exhaustive search for a balanced proper nonempty sub-multiset.
inline bool is_z_irreducible(const SubsetMultiset& m) {
  BalancedVector v = m.to_vector();
  if (!balance_of(v)) throw Unbalanced();
  if (m.empty()) throw ZeroVector();
  std::vector<SubsetMask> sets;
  std::vector<long> caps;
  for (const auto& [s, c] : m.counts()) {
    sets.push_back(s);
    caps.push_back(c);
  }
  std::vector<long> pick(sets.size(), 0);
  // Odometer over all sub-multisets.
  while (true) {
    std::size_t k = 0;
    while (k < pick.size() && pick[k] == caps[k]) pick[k++] = 0;
    if (k == pick.size()) break;
    ++pick[k];
    bool proper = false, nonempty = false;
    for (std::size_t i = 0; i < pick.size(); ++i) {
      if (pick[i] > 0) nonempty = true;
      if (pick[i] < caps[i]) proper = true;
    }
    if (!nonempty || !proper) continue;
    long inc1 = -1;
    bool balanced = true;
    for (int e = 1; e <= m.n() && balanced; ++e) {
      long inc = 0;
      for (std::size_t i = 0; i < pick.size(); ++i)
        if (contains(sets[i], e)) inc += pick[i];
      if (inc1 < 0) inc1 = inc;
      else if (inc != inc1) balanced = false;
    }
    if (balanced) return false;
  }
  return true;
}

// Cramer-rule solve for the unique balanced vector on a candidate support.
// Returns (m, x) in primitive integer form when the support carries a
// strictly positive balanced vector, nullopt otherwise.
inline std::optional<std::pair<Int, IntVec>> complexity_from_support(
    const std::vector<SubsetMask>& sets, int n) {
  check_ground_set(n);
  if (sets.size() > static_cast<std::size_t>(n))
    throw SingularSystem("more support sets than ground elements");
  for (SubsetMask s : sets)
    if (s == 0 || s > full_set(n)) throw ElementOutOfRange();
  RatMatrix cols = support_matrix(n, sets);
  if (rank(cols) != sets.size())
    throw SingularSystem("dependent support indicators");

  // Complete with standard basis columns, smallest index first, keeping the
  // system invertible.
  RatMatrix a(n, RatVec(n, Rat(0)));
  for (std::size_t j = 0; j < sets.size(); ++j)
    for (int i : elements_of(sets[j])) a[i - 1][j] = 1;
  std::size_t next = sets.size();
  for (int e = 1; e <= n && next < static_cast<std::size_t>(n); ++e) {
    for (int i = 0; i < n; ++i) a[i][next] = (i == e - 1) ? 1 : 0;
    RatMatrix head(n);
    for (int i = 0; i < n; ++i)
      head[i].assign(a[i].begin(), a[i].begin() + next + 1);
    if (rank(std::move(head)) == next + 1) ++next;
  }
  if (next < static_cast<std::size_t>(n))
    throw SingularSystem("no invertible completion");

  auto x = solve_square(a, RatVec(n, Rat(1)));
  if (!x) throw SingularSystem("completion unexpectedly singular");
  for (std::size_t i = 0; i < sets.size(); ++i)
    if ((*x)[i] <= 0) return std::nullopt;
  for (std::size_t i = sets.size(); i < x->size(); ++i)
    if ((*x)[i] != 0) return std::nullopt;

  std::vector<Rat> on_support(x->begin(), x->begin() + sets.size());
  IntVec xi = primitive_integer_form(on_support);
  Int m = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (contains(sets[i], 1)) m += xi[i];
  return std::make_pair(m, xi);
}

// The cone {v >= 0 : all incidences equal} in the nonempty subset coordinates.
inline ConeH balanced_cone(int n) {
  ConeH cone;
  std::vector<SubsetMask> order;
  for (SubsetMask s : canonical_subsets(n))
    if (s != 0) order.push_back(s);
  cone.dim = static_cast<int>(order.size());
  for (int i = 0; i < cone.dim; ++i) {
    RatVec row(cone.dim, Rat(0));
    row[i] = 1;
    cone.inequalities.push_back(std::move(row));
  }
  for (int e = 2; e <= n; ++e) {
    RatVec row(cone.dim, Rat(0));
    for (int j = 0; j < cone.dim; ++j) {
      if (contains(order[j], e)) row[j] += 1;
      if (contains(order[j], 1)) row[j] -= 1;
    }
    cone.equalities.push_back(std::move(row));
  }
  return cone;
}

// complexity_from_support, but dependent supports simply yield no vector.
inline std::optional<std::pair<Int, IntVec>> complexity_from_support_or_null(
    const std::vector<SubsetMask>& sets, int n) {
  try {
    return complexity_from_support(sets, n);
  } catch (const SingularSystem&) {
    return std::nullopt;
  }
}

// All irreducible balanced vectors in primitive integer form, computed by
// two independent routes (extreme rays of the balanced cone, and Cramer
// solves over all small supports) which must agree exactly.
inline std::vector<BalancedVector> enumerate_irreducible_balanced(int n) {
  check_ground_set(n);
  std::vector<SubsetMask> order;
  for (SubsetMask s : canonical_subsets(n))
    if (s != 0) order.push_back(s);

  std::vector<BalancedVector> by_cone;
  for (const Ray& r : extreme_rays(balanced_cone(n))) {
    BalancedVector v(n);
    for (std::size_t j = 0; j < order.size(); ++j) v.entry(order[j]) = Rat(r.direction[j]);
    by_cone.push_back(std::move(v));
  }
  std::sort(by_cone.begin(), by_cone.end());

  std::vector<BalancedVector> by_support;
  std::vector<SubsetMask> chosen;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) {
      if (auto sol = complexity_from_support_or_null(chosen, n)) {
        BalancedVector v(n);
        for (std::size_t i = 0; i < chosen.size(); ++i)
          v.entry(chosen[i]) = Rat(sol->second[i]);
        by_support.push_back(std::move(v));
      }
    }
    if (chosen.size() == static_cast<std::size_t>(n)) return;
    for (std::size_t j = start; j < order.size(); ++j) {
      chosen.push_back(order[j]);
      self(self, j + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(by_support.begin(), by_support.end());
  by_support.erase(std::unique(by_support.begin(), by_support.end()),
                   by_support.end());

  if (by_cone != by_support)
    throw Error("balanced enumeration methods disagree");
  return by_cone;
}

// Brute-force maximum determinant over all {0,1} N x N matrices.
inline Int max_det_01(int n) {
  if (n == 0) return 1;
  if (n > 4) throw ParamOutOfRange("max_det_01 is exhaustive; n <= 4");
  Int best = 0;
  std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    IntMatrix a(n, IntVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = (code >> (i * n + j)) & 1;
    Int d = determinant(std::move(a));
    if (d > best) best = d;
  }
  return best;
}

// Max complexity over the irreducible enumeration is below both the
// brute-force max determinant and the closed-form bound
// (N+1)^{(N+1)/2} / 2^N (compared exactly via squares).
inline bool verify_complexity_bound(int n) {
  Int max_m = 0;
  for (const BalancedVector& v : enumerate_irreducible_balanced(n)) {
    Int m = complexity_of_balanced(v);
    if (m > max_m) max_m = m;
  }
  if (n == 0) return true;
  Int maxdet = max_det_01(n);
  if (max_m > maxdet) return false;
  Int pow4;
  mpz_ui_pow_ui(pow4.get_mpz_t(), 4, n);
  Int lhs = max_m * max_m * pow4;  // compare m <= (N+1)^{(N+1)/2}/2^N squared
  Int rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), n + 1, n + 1);
  return lhs <= rhs;
}

// Determinant identities behind the 0/1 to +-1 reduction: A_i (column i
// replaced by ones) maps to a +-1 matrix A_i' with det A_i' = (-2)^{N-1}
// det A_i, and the bordered (N+1) matrix A' satisfies det A' = det A.
inline bool row_operation_check(const IntMatrix& a, int col) {
  int n = static_cast<int>(a.size());
  if (col < 1 || col > std::max(n, 1)) throw ElementOutOfRange();
  for (const auto& row : a)
    for (const Int& x : row)
      if (x != 0 && x != 1) throw Error("matrix must be 0/1");

  IntMatrix ai = a;
  for (int i = 0; i < n; ++i) ai[i][col - 1] = 1;

  IntMatrix aip = ai;
  for (int j = 0; j < n; ++j) {
    if (j == col - 1) continue;
    for (int i = 0; i < n; ++i) aip[i][j] = ai[i][col - 1] - 2 * ai[i][j];
  }
  for (const auto& row : aip)
    for (const Int& x : row)
      if (x != 1 && x != -1) return false;
  Int expect = determinant(ai);
  for (int k = 0; k < n - 1; ++k) expect *= -2;
  if (determinant(aip) != expect) return false;

  // Bordered matrix: ones in the first column, zeros in the rest of the top
  // row, A in the lower right block.
  IntMatrix ap(n + 1, IntVec(n + 1, Int(0)));
  for (int i = 0; i <= n; ++i) ap[i][0] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ap[i + 1][j + 1] = a[i][j];
  return determinant(ap) == determinant(a);
}

struct DeterminantExperiment {
  int n = 0;
  long trials = 0;
  std::uint64_t seed = 0;
  long singular_count = 0;
  Int max_abs_det;
  // |det| * 2^N (the induced +-1 matrix scale) -> occurrences.
  std::map<Int, long> histogram;
};

// Seeded sampling of uniform {0,1} matrices; reproducible bit for bit.
inline DeterminantExperiment determinant_experiment(int n, long trials,
                                                    std::uint64_t seed) {
  if (trials < 1) throw ParamOutOfRange("trials >= 1");
  DeterminantExperiment out;
  out.n = n;
  out.trials = trials;
  out.seed = seed;
  out.max_abs_det = 0;
  Lcg64 rng(seed);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, n);
  for (long t = 0; t < trials; ++t) {
    IntMatrix a(n, IntVec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = rng.next_bit();
    Int d = determinant(std::move(a));
    if (d < 0) d = -d;
    if (d == 0) ++out.singular_count;
    if (d > out.max_abs_det) out.max_abs_det = d;
    ++out.histogram[d * scale];
  }
  return out;
}

}  // namespace supermod

#endif  // SUPERMOD_BALANCED_HPP_
