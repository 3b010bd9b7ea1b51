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

#ifndef SUPERMOD_SET_FUNCTION_HPP_
#define SUPERMOD_SET_FUNCTION_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "supermod/linalg.hpp"
#include "supermod/rational.hpp"
#include "supermod/subsets.hpp"

namespace supermod {

// A total rational-valued function on the subsets of [n].
class SetFunction {
 public:
  explicit SetFunction(int n) : n_(n), values_(std::size_t{1} << n, Rat(0)) {
    check_ground_set(n);
  }

  SetFunction(int n, std::vector<Rat> values) : n_(n), values_(std::move(values)) {
    check_ground_set(n);
    if (values_.size() != (std::size_t{1} << n)) throw DimensionMismatch();
  }

  static SetFunction from(int n, const std::function<Rat(SubsetMask)>& fn) {
    SetFunction f(n);
    for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) f.values_[s] = fn(s);
    return f;
  }

  int n() const { return n_; }
  const Rat& value(SubsetMask s) const { return values_[s]; }
  Rat& value(SubsetMask s) { return values_[s]; }
  const std::vector<Rat>& values() const { return values_; }

  // Values listed in canonical subset order.
  std::vector<Rat> canonical_values() const {
    std::vector<Rat> out;
    out.reserve(values_.size());
    for (SubsetMask s : canonical_subsets(n_)) out.push_back(values_[s]);
    return out;
  }

  // Values on subsets of size >= 2 in canonical order (the standard
  // coordinates of the supermodular cone).
  std::vector<Rat> upper_values() const {
    std::vector<Rat> out;
    for (SubsetMask s : canonical_subsets(n_))
      if (set_size(s) >= 2) out.push_back(values_[s]);
    return out;
  }

  SetFunction& operator+=(const SetFunction& o) {
    require_same_ground_set(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  SetFunction& operator-=(const SetFunction& o) {
    require_same_ground_set(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  SetFunction& operator*=(const Rat& c) {
    for (Rat& v : values_) v *= c;
    return *this;
  }
  friend SetFunction operator+(SetFunction a, const SetFunction& b) { return a += b; }
  friend SetFunction operator-(SetFunction a, const SetFunction& b) { return a -= b; }
  friend SetFunction operator*(const Rat& c, SetFunction f) { return f *= c; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

  // Canonical comparison for deterministic enumeration output.
  friend bool operator<(const SetFunction& a, const SetFunction& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.canonical_values() < b.canonical_values();
  }

  void require_same_ground_set(const SetFunction& o) const {
    if (n_ != o.n_) throw MismatchedGroundSet();
  }

 private:
  int n_;
  std::vector<Rat> values_;
};

// Modular function: determined by its value at the empty set and one
// increment per element.
struct ModularFunction {
  Rat base;
  std::vector<Rat> increments;

  int n() const { return static_cast<int>(increments.size()); }

  SetFunction to_set_function() const {
    return SetFunction::from(n(), [this](SubsetMask s) {
      Rat v = base;
      for (int i : elements_of(s)) v += increments[i - 1];
      return v;
    });
  }
};

// The modular function agreeing with f on all sets of size <= 1.
inline ModularFunction modular_part(const SetFunction& f) {
  ModularFunction m;
  m.base = f.value(0);
  for (int i = 1; i <= f.n(); ++i)
    m.increments.push_back(f.value(singleton(i)) - f.value(0));
  return m;
}

// The supermodularity value of one close pair.
inline Rat supermodularity_value(const SetFunction& f, const ClosePair& p) {
  return f.value(p.meet) + f.value(p.join()) - f.value(p.first()) -
         f.value(p.second());
}

// Supermodularity via the close pairs only; equivalent to the all-pairs check.
inline bool is_supermodular(const SetFunction& f) {
  if (f.n() < 2) return true;
  for (const ClosePair& p : close_pairs(f.n()))
    if (supermodularity_value(f, p) < 0) return false;
  return true;
}

// Quadratic all-pairs supermodularity check (test oracle).
inline bool is_supermodular_full(const SetFunction& f) {
  SubsetMask top = full_set(f.n());
  for (SubsetMask i = 0; i <= top; ++i)
    for (SubsetMask j = i + 1; j <= top; ++j)
      if (f.value(i & j) + f.value(i | j) < f.value(i) + f.value(j))
        return false;
  return true;
}

inline bool is_modular(const SetFunction& f) {
  if (f.n() < 2) return true;
  for (const ClosePair& p : close_pairs(f.n()))
    if (supermodularity_value(f, p) != 0) return false;
  return true;
}

inline bool is_standard(const SetFunction& f) {
  for (SubsetMask s = 0; s < (SubsetMask{1} << f.n()); ++s) {
    const Rat& v = f.value(s);
    if (set_size(s) <= 1) {
      if (v != 0) return false;
    } else if (v.get_den() != 1) {
      return false;
    }
  }
  std::vector<Int> ints;
  for (const Rat& v : f.values()) ints.push_back(v.get_num());
  Int g = vector_gcd(ints);
  return g == 1;
}

// The unique equivalent representative that vanishes on sets of size <= 1
// and takes integer values with gcd 1. Rejects modular input.
inline SetFunction standardize(const SetFunction& f) {
  if (is_modular(f)) throw ModularInput("standardize: modular input");
  SetFunction g = f - modular_part(f).to_set_function();
  return primitive_scale(g.values()) * g;
}

// Whether f and g differ by a modular function.
inline bool equivalent(const SetFunction& f, const SetFunction& g) {
  f.require_same_ground_set(g);
  return is_modular(f - g);
}

// The discrete derivative (∂_i f)(I) = f(I ∪ {i}) − f(I), re-indexed to a
// ground set of size n−1 (remaining elements keep their relative order).
inline SetFunction discrete_derivative(const SetFunction& f, int i) {
  int n = f.n();
  if (i < 1 || i > n) throw ElementOutOfRange();
  SetFunction g(n - 1);
  for (SubsetMask t = 0; t < (SubsetMask{1} << (n - 1)); ++t) {
    // Re-insert a gap at position i-1.
    SubsetMask low = t & ((SubsetMask{1} << (i - 1)) - 1);
    SubsetMask high = (t >> (i - 1)) << i;
    SubsetMask s = low | high;
    g.value(t) = f.value(with_element(s, i)) - f.value(s);
  }
  return g;
}

// Vertex of the base polytope selected by a linear order (polymatroid greedy).
inline std::vector<Rat> greedy_vertex(const SetFunction& f,
                                      const std::vector<int>& order) {
  std::vector<Rat> x(f.n());
  SubsetMask prefix = 0;
  for (int e : order) {
    SubsetMask next = with_element(prefix, e);
    x[e - 1] = f.value(next) - f.value(prefix);
    prefix = next;
  }
  return x;
}

// All vertices of the generalized permutohedron of f (deduplicated, sorted).
inline std::vector<std::vector<Rat>> gp_vertices(const SetFunction& f) {
  if (!is_supermodular(f)) throw NotSupermodular();
  if (f.value(0) != 0) throw Error("gp_vertices: requires f(empty) = 0");
  std::vector<int> order(f.n());
  std::iota(order.begin(), order.end(), 1);
  std::set<std::vector<Rat>> verts;
  do {
    verts.insert(greedy_vertex(f, order));
  } while (std::next_permutation(order.begin(), order.end()));
  return {verts.begin(), verts.end()};
}

// The permutohedron of a sorted point: f(I) = x_1 + ... + x_{|I|}.
inline SetFunction permutohedron_from_point(const std::vector<Rat>& x) {
  int n = static_cast<int>(x.size());
  check_ground_set(n);
  if (!std::is_sorted(x.begin(), x.end())) throw UnsortedInput();
  std::vector<Rat> prefix(n + 1, Rat(0));
  for (int k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + x[k];
  return SetFunction::from(n,
                           [&](SubsetMask s) { return prefix[set_size(s)]; });
}

}  // namespace supermod

#endif  // SUPERMOD_SET_FUNCTION_HPP_
