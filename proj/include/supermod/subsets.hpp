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

#ifndef SUPERMOD_SUBSETS_HPP_
#define SUPERMOD_SUBSETS_HPP_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "supermod/errors.hpp"

namespace supermod {

// Subsets of [n] are stored as bit masks: bit i-1 encodes element i (1-based).
using SubsetMask = std::uint32_t;

inline constexpr int kMaxGroundSet = 16;

inline void check_ground_set(int n) {
  if (n < 0 || n > kMaxGroundSet) throw GroundSetOutOfRange();
}

inline int set_size(SubsetMask s) { return std::popcount(s); }

inline bool contains(SubsetMask s, int element) {
  return (s >> (element - 1)) & 1u;
}

inline SubsetMask with_element(SubsetMask s, int element) {
  return s | (SubsetMask{1} << (element - 1));
}

inline SubsetMask without_element(SubsetMask s, int element) {
  return s & ~(SubsetMask{1} << (element - 1));
}

inline SubsetMask full_set(int n) { return (SubsetMask{1} << n) - 1; }

inline SubsetMask singleton(int element) {
  return SubsetMask{1} << (element - 1);
}

// Elements of the mask as sorted 1-based integers.
inline std::vector<int> elements_of(SubsetMask s) {
  std::vector<int> out;
  for (SubsetMask t = s; t != 0; t &= t - 1)
    out.push_back(std::countr_zero(t) + 1);
  return out;
}

inline SubsetMask mask_of(const std::vector<int>& elements) {
  SubsetMask s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) throw ElementOutOfRange();
    s = with_element(s, e);
  }
  return s;
}

// Canonical subset order: by cardinality, then numeric value, ascending.
inline bool canonical_less(SubsetMask a, SubsetMask b) {
  int ca = set_size(a), cb = set_size(b);
  if (ca != cb) return ca < cb;
  return a < b;
}

// All subsets of [n] in canonical order.
inline std::vector<SubsetMask> canonical_subsets(int n) {
  check_ground_set(n);
  std::vector<SubsetMask> out(SubsetMask{1} << n);
  for (SubsetMask s = 0; s < out.size(); ++s) out[s] = s;
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// A close pair {I, J}: I = meet ∪ {a}, J = meet ∪ {b} with a < b outside meet.
struct ClosePair {
  SubsetMask meet = 0;
  int a = 0;
  int b = 0;

  SubsetMask first() const { return with_element(meet, a); }
  SubsetMask second() const { return with_element(meet, b); }
  SubsetMask join() const { return with_element(first(), b); }
  // Layer = |I| = |J|.
  int layer() const { return set_size(meet) + 1; }

  friend bool operator==(const ClosePair&, const ClosePair&) = default;
};

// The close pairs of [n] in canonical order (meet canonical, then a < b),
// with O(1) index lookup.
class ClosePairSet {
 public:
  explicit ClosePairSet(int n) : n_(n) {
    check_ground_set(n);
    if (n < 2) throw GroundSetOutOfRange("close pairs need n >= 2");
    offset_.assign(SubsetMask{1} << n, -1);
    for (SubsetMask meet : canonical_subsets(n)) {
      if (set_size(meet) > n - 2) continue;
      offset_[meet] = static_cast<int>(pairs_.size());
      for (int a = 1; a <= n; ++a) {
        if (contains(meet, a)) continue;
        for (int b = a + 1; b <= n; ++b) {
          if (contains(meet, b)) continue;
          pairs_.push_back({meet, a, b});
        }
      }
    }
  }

  int n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  const ClosePair& operator[](std::size_t i) const { return pairs_[i]; }
  const std::vector<ClosePair>& pairs() const { return pairs_; }

  // Index of the pair (meet ∪ {a}, meet ∪ {b}); order of a, b irrelevant.
  int index(SubsetMask meet, int a, int b) const {
    if (a > b) std::swap(a, b);
    int base = offset_[meet];
    if (base < 0) throw ElementOutOfRange("not a close pair");
    // Rank of (a, b) among free-element pairs of this meet.
    int rank = 0;
    for (int x = 1; x <= n_; ++x) {
      if (contains(meet, x)) continue;
      for (int y = x + 1; y <= n_; ++y) {
        if (contains(meet, y)) continue;
        if (x == a && y == b) return base + rank;
        ++rank;
      }
    }
    throw ElementOutOfRange("not a close pair");
  }

  int index(const ClosePair& p) const { return index(p.meet, p.a, p.b); }

 private:
  int n_;
  std::vector<ClosePair> pairs_;
  std::vector<int> offset_;
};

// Every unordered close pair of [n], canonically ordered.
inline std::vector<ClosePair> close_pairs(int n) {
  return ClosePairSet(n).pairs();
}

}  // namespace supermod

#endif  // SUPERMOD_SUBSETS_HPP_
