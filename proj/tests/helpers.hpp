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

#ifndef SUPERMOD_TESTS_HELPERS_HPP_
#define SUPERMOD_TESTS_HELPERS_HPP_

#include <algorithm>
#include <vector>

#include "supermod/random.hpp"
#include "supermod/set_function.hpp"
#include "supermod/transform.hpp"

namespace supermod::testing {

// max(0, |I ∩ S| − t): supermodular since x -> max(0, x − t) is convex.
inline SetFunction cut_piece(int n, SubsetMask s, int t) {
  return SetFunction::from(n, [s, t](SubsetMask i) {
    return Rat(std::max(0, set_size(i & s) - t));
  });
}

// Random integer-valued supermodular function: a nonnegative integer
// combination of cut pieces plus a random modular part.
inline SetFunction random_supermodular(int n, Lcg64& rng) {
  SetFunction f(n);
  int pieces = 1 + static_cast<int>(rng.next_below(4));
  for (int p = 0; p < pieces; ++p) {
    SubsetMask s =
        static_cast<SubsetMask>(rng.next_below(SubsetMask{1} << n));
    if (set_size(s) < 2) s = full_set(n);
    int t = 1 + static_cast<int>(rng.next_below(set_size(s) - 1));
    long c = 1 + static_cast<long>(rng.next_below(3));
    f += Rat(c) * cut_piece(n, s, t);
  }
  ModularFunction m;
  m.base = Rat(static_cast<long>(rng.next_below(7)) - 3);
  for (int i = 0; i < n; ++i)
    m.increments.push_back(Rat(static_cast<long>(rng.next_below(7)) - 3));
  f += m.to_set_function();
  return f;
}

// Random (typically non-supermodular) integer set function.
inline SetFunction random_set_function(int n, Lcg64& rng) {
  return SetFunction::from(n, [&rng](SubsetMask) {
    return Rat(static_cast<long>(rng.next_below(11)) - 5);
  });
}

// Random close-pair vector with small integer entries.
inline SupermodularityVector random_vector(int n, Lcg64& rng) {
  SupermodularityVector s(n);
  for (Rat& e : s.entries())
    e = Rat(static_cast<long>(rng.next_below(5)) - 2);
  return s;
}

// All same-color path sums agree (condition (2) of the path-sum theorem).
inline bool path_sums_constant(const SupermodularityVector& s) {
  int n = s.n();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<bool> seen(n + 1, false);
  std::vector<Rat> value(n + 1);
  do {
    Rat p = path_sum(s, order);
    int color = order.front();
    if (!seen[color]) {
      seen[color] = true;
      value[color] = p;
    } else if (value[color] != p) {
      return false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return true;
}

}  // namespace supermod::testing

#endif  // SUPERMOD_TESTS_HELPERS_HPP_
