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

#ifndef SUPERMOD_TWOLAYER_HPP_
#define SUPERMOD_TWOLAYER_HPP_

#include <algorithm>
#include <string>
#include <vector>

#include "supermod/linalg.hpp"
#include "supermod/set_function.hpp"
#include "supermod/subsets.hpp"

namespace supermod {

// Hypersimplex function: alpha_{n,t}(I) = max(0, |I| - t). Its
// supermodularity vector is the indicator of layer t.
inline SetFunction alpha(int n, int t) {
  check_ground_set(n);
  if (t < 1 || t > n - 1) throw ParamOutOfRange("alpha: 1 <= t <= n-1");
  return SetFunction::from(n, [t](SubsetMask s) {
    return Rat(std::max(0, set_size(s) - t));
  });
}

// Lift of the one-smaller hypersimplex ignoring element k:
// beta_{n,t,k}(I) = max(0, |I \ {k}| - t).
inline SetFunction beta(int n, int t, int k) {
  check_ground_set(n);
  if (t < 1 || t > n - 2) throw ParamOutOfRange("beta: 1 <= t <= n-2");
  if (k < 1 || k > n) throw ParamOutOfRange("beta: k in [n]");
  return SetFunction::from(n, [t, k](SubsetMask s) {
    return Rat(std::max(0, set_size(without_element(s, k)) - t));
  });
}

// gamma_{n,t,l} = sum_{k != l} beta_{n,t,k} - (n-t-2) alpha_{n,t}
//                 - (t-1) alpha_{n,t+1}; supermodular for all parameters.
inline SetFunction gamma(int n, int t, int l) {
  check_ground_set(n);
  if (t < 1 || t > n - 2) throw ParamOutOfRange("gamma: 1 <= t <= n-2");
  if (l < 1 || l > n) throw ParamOutOfRange("gamma: l in [n]");
  SetFunction f(n);
  for (int k = 1; k <= n; ++k)
    if (k != l) f += beta(n, t, k);
  f -= Rat(n - t - 2) * alpha(n, t);
  f -= Rat(t - 1) * alpha(n, t + 1);
  if (!is_supermodular(f)) throw Error("gamma is not supermodular");
  return f;
}

// The subset sizes for which the two-layer construction yields an
// irreducible function. |S| = n-1 degenerates to a reducible sum exactly
// when n-1 <= min(t+1, n-t), which happens only at (n, t) = (3, 1).
inline bool two_layer_admissible(int n, int t, int size) {
  int lo = std::min(t + 1, n - t), hi = std::max(t + 1, n - t);
  if (size == 1) return true;
  if (lo < size && size < hi) return true;
  if (size == n - 1 && size > lo) return true;
  return false;
}

// The two-layer family member attached to an admissible subset S:
//   sum_{k in S} beta_{n,t,k} - max(0,|S|-(t+1)) alpha_{n,t}
//                             - max(0,|S|-(n-t)) alpha_{n,t+1},
// returned as its standard representative.
inline SetFunction from_subset(int n, int t, SubsetMask s) {
  check_ground_set(n);
  if (t < 1 || t > n - 2) throw ParamOutOfRange("from_subset: 1 <= t <= n-2");
  if (s > full_set(n)) throw ElementOutOfRange();
  int size = set_size(s);
  if (!two_layer_admissible(n, t, size))
    throw InadmissibleSubset(
        "|S| = " + std::to_string(size) + " violates |S| in {1, n-1} or " +
        std::to_string(std::min(t + 1, n - t)) + " < |S| < " +
        std::to_string(std::max(t + 1, n - t)));
  SetFunction f(n);
  for (int k : elements_of(s)) f += beta(n, t, k);
  f -= Rat(std::max(0, size - (t + 1))) * alpha(n, t);
  f -= Rat(std::max(0, size - (n - t))) * alpha(n, t + 1);
  if (!is_supermodular(f)) throw Error("two-layer member not supermodular");
  return standardize(f);
}

// Exact check of sum_k beta_{n,t,k} = (n-t-1) alpha_{n,t} + t alpha_{n,t+1}.
inline bool verify_two_layer_identity(int n, int t) {
  if (t < 1 || t > n - 2) throw ParamOutOfRange();
  SetFunction lhs(n);
  for (int k = 1; k <= n; ++k) lhs += beta(n, t, k);
  SetFunction rhs = Rat(n - t - 1) * alpha(n, t) + Rat(t) * alpha(n, t + 1);
  return lhs == rhs;
}

// The family K of standard irreducible supermodular functions whose
// supermodularities live on layers t and t+1, canonically ordered.
inline std::vector<SetFunction> enumerate_two_layer(int n, int t) {
  if (t < 1 || t > n - 2) throw ParamOutOfRange();
  std::vector<SetFunction> k;
  k.push_back(alpha(n, t));
  k.push_back(alpha(n, t + 1));
  for (SubsetMask s = 1; s <= full_set(n); ++s)
    if (two_layer_admissible(n, t, set_size(s)))
      k.push_back(from_subset(n, t, s));
  std::sort(k.begin(), k.end());
  k.erase(std::unique(k.begin(), k.end()), k.end());

  // Structural guard: the family spans a space of dimension exactly n+1.
  RatMatrix span;
  for (const SetFunction& f : k) span.push_back(f.canonical_values());
  if (rank(std::move(span)) != static_cast<std::size_t>(n) + 1)
    throw Error("two-layer family has unexpected span dimension");
  return k;
}

}  // namespace supermod

#endif  // SUPERMOD_TWOLAYER_HPP_
