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

#ifndef SUPERMOD_NONDECREASING_HPP_
#define SUPERMOD_NONDECREASING_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "supermod/set_function.hpp"
#include "supermod/subsets.hpp"

namespace supermod {

// An antichain of subsets of [n]: no member contains another.
struct Antichain {
  int n = 0;
  std::vector<SubsetMask> sets;  // canonical order

  void canonicalize() { std::sort(sets.begin(), sets.end(), canonical_less); }

  bool valid() const {
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (i != j && (sets[i] & sets[j]) == sets[i]) return false;
    return true;
  }

  friend bool operator==(const Antichain&, const Antichain&) = default;
};

// Checks f(I + i) >= f(I) over all covers; sufficient by transitivity.
inline bool is_nondecreasing(const SetFunction& f) {
  for (SubsetMask s = 0; s < (SubsetMask{1} << f.n()); ++s)
    for (int i = 1; i <= f.n(); ++i)
      if (!contains(s, i) && f.value(with_element(s, i)) < f.value(s))
        return false;
  return true;
}

// Indicator of the upset generated by the antichain.
inline SetFunction up_function(const Antichain& a) {
  if (a.sets.empty()) throw EmptyAntichain();
  return SetFunction::from(a.n, [&a](SubsetMask s) {
    for (SubsetMask m : a.sets)
      if ((s & m) == m) return Rat(1);
    return Rat(0);
  });
}

// The antichain of minimal sets strictly above the base level; also the
// witness used by the reducibility argument (f - c u_A stays nondecreasing
// for small c > 0).
inline Antichain minimal_excess_antichain(const SetFunction& f) {
  Antichain a;
  a.n = f.n();
  Rat base = f.value(0);
  for (SubsetMask s : canonical_subsets(f.n())) {
    if (f.value(s) <= base) continue;
    bool minimal = true;
    for (SubsetMask m : a.sets)
      if ((s & m) == m) {
        minimal = false;
        break;
      }
    if (minimal) a.sets.push_back(s);
  }
  return a;
}

// Irreducibility of a nondecreasing function: returns (c, A) exactly when
// f = f(empty) + c * u_A for the antichain A of minimal sets above the base
// level, with c = f([n]) - f(empty) > 0. Constant or reducible input yields
// nothing.
inline std::optional<std::pair<Rat, Antichain>> is_irreducible_nondecreasing(
    const SetFunction& f) {
  if (!is_nondecreasing(f)) throw NotNondecreasing();
  Rat base = f.value(0);
  Rat c = f.value(full_set(f.n())) - base;
  if (c == 0) return std::nullopt;  // constant

  Antichain a = minimal_excess_antichain(f);
  SetFunction expected = up_function(a);
  for (SubsetMask s = 0; s < (SubsetMask{1} << f.n()); ++s)
    if (f.value(s) != base + c * expected.value(s)) return std::nullopt;
  return std::make_pair(c, a);
}

struct AntichainCount {
  std::uint64_t with_empty = 0;     // includes the empty antichain
  std::uint64_t without_empty = 0;
};

// Exhaustive antichain count by backtracking over canonical subsets.
inline AntichainCount count_antichains(int n) {
  if (n < 0 || n > 6) throw ParamOutOfRange("count_antichains: n <= 6");
  std::vector<SubsetMask> order = canonical_subsets(n);
  std::size_t total = order.size();
  // comparable[i]: bitmask over positions of sets comparable with order[i].
  std::vector<std::uint64_t> comparable(total, 0);
  for (std::size_t i = 0; i < total; ++i)
    for (std::size_t j = 0; j < total; ++j) {
      SubsetMask a = order[i], b = order[j];
      if ((a & b) == a || (a & b) == b)
        comparable[i] |= std::uint64_t{1} << j;
    }
  std::uint64_t count = 0;
  auto dfs = [&](auto&& self, std::uint64_t candidates) -> void {
    ++count;
    for (std::uint64_t c = candidates; c != 0; c &= c - 1) {
      int j = std::countr_zero(c);
      // Only extend with higher positions to enumerate each set once.
      std::uint64_t mask_higher = ~((std::uint64_t{2} << j) - 1);
      self(self, candidates & ~comparable[j] & mask_higher);
    }
  };
  dfs(dfs, total >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1);
  return {count, count - 1};
}

}  // namespace supermod

#endif  // SUPERMOD_NONDECREASING_HPP_
