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

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "supermod/nondecreasing.hpp"

using namespace supermod;

namespace {

// All antichains of subsets of [n] by brute force over families.
std::vector<Antichain> all_antichains(int n) {
  std::vector<SubsetMask> order = canonical_subsets(n);
  std::vector<Antichain> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << order.size());
       ++code) {
    Antichain a;
    a.n = n;
    for (std::size_t i = 0; i < order.size(); ++i)
      if ((code >> i) & 1) a.sets.push_back(order[i]);
    if (a.valid()) out.push_back(a);
  }
  return out;
}

}  // namespace

TEST_CASE("nondecreasing check") {
  CHECK(is_nondecreasing(
      SetFunction::from(3, [](SubsetMask s) { return Rat(set_size(s)); })));

  Antichain a{2, {mask_of({1})}};
  CHECK(is_nondecreasing(up_function(a)));

  SetFunction bad(2);
  bad.value(mask_of({1})) = 1;
  bad.value(mask_of({1, 2})) = 0;
  CHECK_FALSE(is_nondecreasing(bad));
}

TEST_CASE("up functions") {
  Antichain one{2, {mask_of({1})}};
  SetFunction u1 = up_function(one);
  CHECK(u1.value(0) == 0);
  CHECK(u1.value(mask_of({1})) == 1);
  CHECK(u1.value(mask_of({2})) == 0);
  CHECK(u1.value(mask_of({1, 2})) == 1);

  Antichain both{2, {mask_of({1}), mask_of({2})}};
  SetFunction ub = up_function(both);
  for (SubsetMask s = 0; s < 4; ++s) CHECK(ub.value(s) == (s == 0 ? 0 : 1));

  Antichain top{3, {full_set(3)}};
  SetFunction ut = up_function(top);
  for (SubsetMask s = 0; s < 8; ++s)
    CHECK(ut.value(s) == (s == full_set(3) ? 1 : 0));

  CHECK_THROWS_AS(up_function(Antichain{2, {}}), EmptyAntichain);
}

TEST_CASE("irreducible nondecreasing classification") {
  Antichain both{2, {mask_of({1}), mask_of({2})}};
  auto res = is_irreducible_nondecreasing(up_function(both));
  REQUIRE(res.has_value());
  CHECK(res->first == 1);
  CHECK(res->second == both);

  CHECK_FALSE(is_irreducible_nondecreasing(
      SetFunction::from(2, [](SubsetMask s) { return Rat(set_size(s)); })));

  CHECK_FALSE(is_irreducible_nondecreasing(
      SetFunction::from(2, [](SubsetMask) { return Rat(5); })));

  SetFunction bad(2);
  bad.value(mask_of({1})) = 1;
  bad.value(mask_of({1, 2})) = 0;
  CHECK_THROWS_AS(is_irreducible_nondecreasing(bad), NotNondecreasing);
}

TEST_CASE("up functions of all antichains are irreducible, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Antichain& a : all_antichains(n)) {
      if (a.sets.empty()) continue;
      // A = {empty set} gives the constant 1 function, which is modular and
      // therefore not irreducible.
      if (a.sets.front() == 0) continue;
      auto res = is_irreducible_nondecreasing(up_function(a));
      REQUIRE(res.has_value());
      CHECK(res->first == 1);
      Antichain sorted = a;
      sorted.canonicalize();
      CHECK(res->second == sorted);
    }
}

TEST_CASE("reducibility witness") {
  // When f is nondecreasing, non-constant, and not c*u_A, subtracting the
  // minimal positive excess times u_A keeps it nondecreasing.
  Lcg64 rng(59);
  for (int trial = 0; trial < 50; ++trial) {
    SetFunction f = SetFunction::from(3, [&rng](SubsetMask) {
      return Rat(static_cast<long>(rng.next_below(4)));
    });
    if (!is_nondecreasing(f)) continue;
    if (is_irreducible_nondecreasing(f)) continue;
    if (f.value(full_set(3)) == f.value(0)) continue;
    Antichain a = minimal_excess_antichain(f);
    Rat c;
    bool first = true;
    for (SubsetMask s : a.sets) {
      Rat excess = f.value(s) - f.value(0);
      if (first || excess < c) {
        c = excess;
        first = false;
      }
    }
    REQUIRE(c > 0);
    CHECK(is_nondecreasing(f - c * up_function(a)));
  }
}

TEST_CASE("derivatives of supermodular functions are nondecreasing") {
  Lcg64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    SetFunction f = testing::random_supermodular(4, rng);
    for (int i = 1; i <= 4; ++i)
      CHECK(is_nondecreasing(discrete_derivative(f, i)));
  }
}

TEST_CASE("antichain counts") {
  CHECK(count_antichains(0).with_empty == 2);
  CHECK(count_antichains(0).without_empty == 1);
  for (int n = 0; n <= 3; ++n) {
    AntichainCount c = count_antichains(n);
    CHECK(c.with_empty == all_antichains(n).size());
    CHECK(c.without_empty == c.with_empty - 1);
  }
  // Dedekind numbers 2, 3, 6, 20, 168, 7581.
  CHECK(count_antichains(1).with_empty == 3);
  CHECK(count_antichains(2).with_empty == 6);
  CHECK(count_antichains(3).with_empty == 20);
  CHECK(count_antichains(4).with_empty == 168);
  CHECK(count_antichains(5).with_empty == 7581);

  // Lower bound 2^{C(n, floor(n/2))}.
  std::uint64_t binom[6] = {1, 1, 2, 3, 6, 10};
  for (int n = 1; n <= 5; ++n)
    CHECK(count_antichains(n).with_empty >= (std::uint64_t{1} << binom[n]));
}
