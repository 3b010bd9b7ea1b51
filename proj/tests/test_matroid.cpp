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

#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "supermod/matroid.hpp"
#include "supermod/supermodular_cone.hpp"
#include "supermod/twolayer.hpp"

using namespace supermod;

namespace {

Matroid u12() { return Matroid(2, {mask_of({1}), mask_of({2})}); }

Matroid u13() {
  return Matroid(3, {mask_of({1}), mask_of({2}), mask_of({3})});
}

Matroid free_matroid(int n) { return Matroid(n, {full_set(n)}); }

}  // namespace

TEST_CASE("exchange axiom") {
  CHECK(check_exchange({mask_of({1}), mask_of({2})}));
  CHECK_FALSE(check_exchange({mask_of({1, 2}), mask_of({3, 4})}));
  CHECK(check_exchange({mask_of({1, 2})}));
  CHECK_FALSE(check_exchange({mask_of({1}), mask_of({2, 3})}));  // mixed sizes
  CHECK_FALSE(check_exchange({}));
  CHECK_THROWS_AS(Matroid(4, {mask_of({1, 2}), mask_of({3, 4})}), Error);
}

TEST_CASE("rank and nullity") {
  Matroid m = u12();
  CHECK(m.rank() == 1);
  CHECK(m.rank(mask_of({1, 2})) == 1);
  CHECK(m.nullity(mask_of({1, 2})) == 1);
  CHECK(m.nullity(0) == 0);

  Matroid fr = free_matroid(3);
  for (SubsetMask s = 0; s < 8; ++s) CHECK(fr.nullity(s) == 0);
}

TEST_CASE("loops and coloops") {
  Matroid m(2, {mask_of({1})});
  CHECK(m.loops() == mask_of({2}));
  CHECK(m.coloops() == mask_of({1}));
  CHECK(u12().loops() == 0);
  CHECK(u12().coloops() == 0);
  CHECK(free_matroid(3).coloops() == full_set(3));
}

TEST_CASE("matroid reducibility") {
  // A loop makes the matroid reducible.
  Matroid with_loop(2, {mask_of({1})});
  CHECK(is_reducible_matroid(with_loop).has_value());

  CHECK_FALSE(is_reducible_matroid(u12()).has_value());

  // U_{1,2} + U_{1,2} on {1,2} and {3,4}.
  Matroid sum(4, {mask_of({1, 3}), mask_of({1, 4}), mask_of({2, 3}),
                  mask_of({2, 4})});
  auto part = is_reducible_matroid(sum);
  REQUIRE(part.has_value());
  CHECK(part->first == mask_of({1, 2}));
  CHECK(part->second == mask_of({3, 4}));
}

TEST_CASE("nullity-reducing splits") {
  // U_{1,2} plus the coloop 3: reducible as a matroid via the free factor
  // {3}, but the nullity function max(0, |I \ {3}| - 1) is irreducible.
  Matroid coloop3(3, {mask_of({1, 3}), mask_of({2, 3})});
  CHECK(is_reducible_matroid(coloop3).has_value());
  CHECK_FALSE(nullity_reducing_split(coloop3).has_value());
  CHECK(matroid_to_supermodular(coloop3) == beta(3, 1, 3));
  CHECK(is_irreducible_supermodular(beta(3, 1, 3)).irreducible);

  // Two non-free factors: the split is nullity-reducing.
  Matroid sum(4, {mask_of({1, 3}), mask_of({1, 4}), mask_of({2, 3}),
                  mask_of({2, 4})});
  auto split = nullity_reducing_split(sum);
  REQUIRE(split.has_value());
  CHECK(split->first == mask_of({1, 2}));
  CHECK(split->second == mask_of({3, 4}));

  CHECK_FALSE(nullity_reducing_split(u12()).has_value());
}

TEST_CASE("nullity as a set function") {
  SetFunction f = matroid_to_supermodular(u12());
  CHECK(f.value(mask_of({1, 2})) == 1);
  CHECK(f.value(mask_of({1})) == 0);

  CHECK(matroid_to_supermodular(free_matroid(3)) == SetFunction(3));

  CHECK(matroid_to_supermodular(u13()) == alpha(3, 1));

  Matroid with_loop(2, {mask_of({1})});
  CHECK_THROWS_AS(matroid_to_supermodular(with_loop), HasLoop);
}

TEST_CASE("nullity is supermodular and nondecreasing") {
  for (int n = 1; n <= 4; ++n)
    for (const Matroid& m : enumerate_loopless_matroids(n)) {
      SetFunction f = matroid_to_supermodular(m);
      CHECK(is_supermodular(f));
      CHECK(is_nondecreasing(f));
      CHECK(is_simple(f));
    }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(alpha(3, 1)));
  CHECK(is_simple(alpha(4, 2)));
  CHECK_FALSE(is_simple(alpha(3, 1) + alpha(3, 2)));
  CHECK(is_simple(SetFunction(3)));
}

TEST_CASE("matroid of a simple function") {
  CHECK(supermodular_to_matroid(alpha(3, 1)) == u13());
  CHECK(supermodular_to_matroid(SetFunction(3)) == free_matroid(3));

  SetFunction f(2);
  f.value(mask_of({1, 2})) = 1;
  CHECK(supermodular_to_matroid(f) == u12());

  CHECK_THROWS_AS(supermodular_to_matroid(alpha(3, 1) + alpha(3, 2)),
                  NotSimple);
}

TEST_CASE("loopless matroid enumeration") {
  CHECK(enumerate_loopless_matroids(1).size() == 1);
  std::vector<Matroid> two = enumerate_loopless_matroids(2);
  REQUIRE(two.size() == 2);
  CHECK(std::find(two.begin(), two.end(), u12()) != two.end());
  CHECK(std::find(two.begin(), two.end(), free_matroid(2)) != two.end());
}

TEST_CASE("roundtrip on all loopless matroids, n <= 4") {
  for (int n = 1; n <= 4; ++n)
    for (const Matroid& m : enumerate_loopless_matroids(n))
      CHECK(supermodular_to_matroid(matroid_to_supermodular(m)) == m);
}

TEST_CASE("bijection with simple irreducible supermodular functions") {
  for (int n = 2; n <= 4; ++n) {
    // Simple members of the ray list.
    std::vector<std::vector<Rat>> simple_rays;
    for (const SetFunction& f : enumerate_irreducible_supermodular(n))
      if (is_simple(f)) simple_rays.push_back(f.canonical_values());
    std::sort(simple_rays.begin(), simple_rays.end());

    // Nullity functions of loopless matroids with no nullity-reducing
    // split. A free factor contributes the zero function, so a matroid
    // that is reducible only via free factors (e.g. a coloop split) still
    // yields an irreducible nullity function: U_{1,2} plus a coloop maps
    // to the segment function max(0, |I \ {k}| - 1).
    std::vector<std::vector<Rat>> matroid_fns;
    for (const Matroid& m : enumerate_loopless_matroids(n)) {
      SetFunction f = matroid_to_supermodular(m);
      if (is_modular(f)) continue;  // free matroid
      if (!nullity_reducing_split(m))
        matroid_fns.push_back(f.canonical_values());
    }
    std::sort(matroid_fns.begin(), matroid_fns.end());

    CHECK(simple_rays == matroid_fns);

    // Irreducibility of the function corresponds to the absence of a
    // nullity-reducing split; plain matroid irreducibility implies it.
    for (const Matroid& m : enumerate_loopless_matroids(n)) {
      SetFunction f = matroid_to_supermodular(m);
      if (is_modular(f)) continue;  // free matroid; reducible for n >= 2
      bool irred = is_irreducible_supermodular(f).irreducible;
      CHECK(!nullity_reducing_split(m).has_value() == irred);
      if (!is_reducible_matroid(m)) CHECK(irred);
    }
  }
}
