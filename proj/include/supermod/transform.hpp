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

#ifndef SUPERMOD_TRANSFORM_HPP_
#define SUPERMOD_TRANSFORM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "supermod/linalg.hpp"
#include "supermod/set_function.hpp"
#include "supermod/subsets.hpp"

namespace supermod {

// Vector of supermodularity values, one entry per close pair of [n].
class SupermodularityVector {
 public:
  explicit SupermodularityVector(int n)
      : pairs_(n), entries_(pairs_.size(), Rat(0)) {}

  SupermodularityVector(int n, std::vector<Rat> entries)
      : pairs_(n), entries_(std::move(entries)) {
    if (entries_.size() != pairs_.size()) throw DimensionMismatch();
  }

  int n() const { return pairs_.n(); }
  const ClosePairSet& pairs() const { return pairs_; }
  const std::vector<Rat>& entries() const { return entries_; }
  std::vector<Rat>& entries() { return entries_; }

  const Rat& at(SubsetMask meet, int a, int b) const {
    return entries_[pairs_.index(meet, a, b)];
  }
  Rat& at(SubsetMask meet, int a, int b) {
    return entries_[pairs_.index(meet, a, b)];
  }
  const Rat& at(const ClosePair& p) const { return entries_[pairs_.index(p)]; }

  bool is_zero() const {
    for (const Rat& e : entries_)
      if (e != 0) return false;
    return true;
  }

  bool is_nonnegative() const {
    for (const Rat& e : entries_)
      if (e < 0) return false;
    return true;
  }

  friend bool operator==(const SupermodularityVector& a,
                         const SupermodularityVector& b) {
    return a.n() == b.n() && a.entries_ == b.entries_;
  }

 private:
  ClosePairSet pairs_;
  std::vector<Rat> entries_;
};

// The linear map T: set functions -> supermodularity vectors. Its kernel is
// exactly the modular functions.
inline SupermodularityVector apply_transform(const SetFunction& f) {
  SupermodularityVector s(f.n());
  const auto& pairs = s.pairs().pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s.entries()[i] = supermodularity_value(f, pairs[i]);
  return s;
}

// The matrix of T in (canonical close pair) x (subset mask) coordinates.
inline RatMatrix transform_matrix(int n) {
  ClosePairSet pairs(n);
  RatMatrix m(pairs.size(), RatVec(std::size_t{1} << n, Rat(0)));
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const ClosePair& p = pairs[r];
    m[r][p.meet] += 1;
    m[r][p.join()] += 1;
    m[r][p.first()] -= 1;
    m[r][p.second()] -= 1;
  }
  return m;
}

// The chain of n-1 close pairs traversed by a permutation, colored by its
// first entry.
struct PathChain {
  std::vector<int> sigma;
  std::vector<ClosePair> pairs;
  int color = 0;
};

inline void check_permutation(const std::vector<int>& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) throw NotAPermutation();
  SubsetMask seen = 0;
  for (int e : sigma) {
    if (e < 1 || e > n || contains(seen, e)) throw NotAPermutation();
    seen = with_element(seen, e);
  }
}

inline PathChain path_chain(const std::vector<int>& sigma, int n) {
  check_permutation(sigma, n);
  PathChain chain;
  chain.sigma = sigma;
  chain.color = sigma.front();
  for (int r = 1; r <= n - 1; ++r) {
    // I_r = {sigma_1..sigma_r}, J_r = {sigma_2..sigma_{r+1}}; their meet is
    // {sigma_2..sigma_r} and the swapped elements are sigma_1, sigma_{r+1}.
    SubsetMask meet = 0;
    for (int k = 2; k <= r; ++k) meet = with_element(meet, sigma[k - 1]);
    int a = sigma[0], b = sigma[r];
    if (a > b) std::swap(a, b);
    chain.pairs.push_back({meet, a, b});
  }
  return chain;
}

inline Rat path_sum(const SupermodularityVector& s,
                    const std::vector<int>& sigma) {
  PathChain chain = path_chain(sigma, s.n());
  Rat total = 0;
  for (const ClosePair& p : chain.pairs) total += s.at(p);
  return total;
}

// Closed-form color weights m_i = f([n]) + f(∅) − f({i}) − f([n] \ {i});
// equal to every path sum of color i of Tf.
inline std::vector<Rat> color_weights(const SetFunction& f) {
  std::vector<Rat> m;
  SubsetMask top = full_set(f.n());
  for (int i = 1; i <= f.n(); ++i)
    m.push_back(f.value(top) + f.value(0) - f.value(singleton(i)) -
                f.value(without_element(top, i)));
  return m;
}

// A failed exchange identity, as a certificate of non-membership in im T.
struct ImageViolation {
  SubsetMask meet = 0;  // the common part I
  int i = 0, j = 0, k = 0;
};

// Checks the exchange identities
//   s_{I+i,I+j} + s_{I+ij,I+jk} = s_{I+i,I+k} + s_{I+ik,I+jk}
// for all I and distinct i, j, k outside I. Returns the first failure.
inline std::optional<ImageViolation> image_violation(
    const SupermodularityVector& s) {
  int n = s.n();
  for (SubsetMask meet = 0; meet < (SubsetMask{1} << n); ++meet) {
    if (set_size(meet) > n - 3) continue;
    for (int i = 1; i <= n; ++i) {
      if (contains(meet, i)) continue;
      // The identity is symmetric in swapping j and k, so take j < k.
      for (int j = 1; j <= n; ++j) {
        if (j == i || contains(meet, j)) continue;
        for (int k = j + 1; k <= n; ++k) {
          if (k == i || k == j || contains(meet, k)) continue;
          Rat lhs = s.at(meet, i, j) +
                    s.at(with_element(meet, j), i, k);
          Rat rhs = s.at(meet, i, k) +
                    s.at(with_element(meet, k), i, j);
          if (lhs != rhs) return ImageViolation{meet, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

inline bool in_image(const SupermodularityVector& s) {
  return !image_violation(s).has_value();
}

// Rebuilds the unique f with f = 0 on |I| <= 1 and Tf = s, by the layer
// recursion f(J) = s_{I+i,I+j} + f(I+i) + f(I+j) − f(I) with (i, j) the two
// smallest elements of J. Any choice of (i, j) gives the same f when s is in
// the image; the fixed choice makes the output reproducible.
inline SetFunction reconstruct(const SupermodularityVector& s) {
  if (!in_image(s)) throw NotInImage();
  int n = s.n();
  SetFunction f(n);
  for (SubsetMask j_set : canonical_subsets(n)) {
    if (set_size(j_set) < 2) continue;
    std::vector<int> elems = elements_of(j_set);
    int i = elems[0], j = elems[1];
    SubsetMask meet = without_element(without_element(j_set, i), j);
    f.value(j_set) = s.at(meet, i, j) + f.value(with_element(meet, i)) +
                     f.value(with_element(meet, j)) - f.value(meet);
  }
  return f;
}

// Complexity: max color weight of Tf after scaling to primitive integers.
inline Int complexity_of(const SetFunction& f) {
  SupermodularityVector s = apply_transform(f);
  if (s.is_zero()) throw ModularInput("complexity_of: modular input");
  Rat c = primitive_scale(s.entries());
  SetFunction g = c * (f - modular_part(f).to_set_function());
  Int best = 0;
  for (const Rat& m : color_weights(g)) {
    if (m.get_den() != 1) throw Error("complexity_of: non-integer weight");
    if (m.get_num() > best) best = m.get_num();
  }
  return best;
}

}  // namespace supermod

#endif  // SUPERMOD_TRANSFORM_HPP_
