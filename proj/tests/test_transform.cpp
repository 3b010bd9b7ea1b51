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
#include "supermod/linalg.hpp"
#include "supermod/transform.hpp"
#include "supermod/twolayer.hpp"

using namespace supermod;
using supermod::testing::path_sums_constant;
using supermod::testing::random_supermodular;
using supermod::testing::random_vector;

TEST_CASE("transform of the hypersimplex functions") {
  SupermodularityVector s = apply_transform(alpha(3, 1));
  for (std::size_t i = 0; i < s.pairs().size(); ++i)
    CHECK(s.entries()[i] == (s.pairs()[i].layer() == 1 ? 1 : 0));

  ModularFunction m{Rat(2), {Rat(1), Rat(-1), Rat(5)}};
  CHECK(apply_transform(m.to_set_function()).is_zero());

  SupermodularityVector both = apply_transform(alpha(3, 1) + alpha(3, 2));
  for (const Rat& e : both.entries()) CHECK(e == 1);
}

TEST_CASE("path chains") {
  PathChain chain = path_chain({2, 4, 1, 3}, 4);
  CHECK(chain.color == 2);
  REQUIRE(chain.pairs.size() == 3);
  // Pairs are unordered; first()/second() sort by the swapped elements.
  auto is_pair = [](const ClosePair& p, SubsetMask x, SubsetMask y) {
    return (p.first() == x && p.second() == y) ||
           (p.first() == y && p.second() == x);
  };
  CHECK(is_pair(chain.pairs[0], mask_of({2}), mask_of({4})));
  CHECK(is_pair(chain.pairs[1], mask_of({2, 4}), mask_of({4, 1})));
  CHECK(is_pair(chain.pairs[2], mask_of({2, 4, 1}), mask_of({4, 1, 3})));

  PathChain tiny = path_chain({1, 2}, 2);
  REQUIRE(tiny.pairs.size() == 1);
  CHECK(tiny.pairs[0].first() == mask_of({1}));
  CHECK(tiny.pairs[0].second() == mask_of({2}));

  PathChain three = path_chain({1, 2, 3}, 3);
  REQUIRE(three.pairs.size() == 2);
  CHECK(three.pairs[0].first() == mask_of({1}));
  CHECK(three.pairs[0].second() == mask_of({2}));
  CHECK(three.pairs[1].first() == mask_of({1, 2}));
  CHECK(three.pairs[1].second() == mask_of({2, 3}));

  // I_r ∪ J_r = I_{r+1}, one side of the next pair.
  for (std::size_t r = 0; r + 1 < chain.pairs.size(); ++r) {
    SubsetMask join = chain.pairs[r].join();
    CHECK((join == chain.pairs[r + 1].first() ||
           join == chain.pairs[r + 1].second()));
  }

  CHECK_THROWS_AS(path_chain({1, 1, 2}, 3), NotAPermutation);
  CHECK_THROWS_AS(path_chain({1, 2}, 3), NotAPermutation);
}

TEST_CASE("path sums") {
  SupermodularityVector s1 = apply_transform(alpha(3, 1));
  CHECK(path_sum(s1, {1, 2, 3}) == 1);
  CHECK(path_sum(SupermodularityVector(3), {2, 3, 1}) == 0);
  SupermodularityVector s2 = apply_transform(alpha(3, 1) + alpha(3, 2));
  CHECK(path_sum(s2, {1, 2, 3}) == 2);
  CHECK(path_sum(s2, {3, 1, 2}) == 2);
}

TEST_CASE("color weights") {
  CHECK(color_weights(alpha(3, 1)) ==
        std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  ModularFunction m{Rat(1), {Rat(4), Rat(-2), Rat(0)}};
  CHECK(color_weights(m.to_set_function()) ==
        std::vector<Rat>{Rat(0), Rat(0), Rat(0)});
  CHECK(color_weights(beta(4, 1, 4)) ==
        std::vector<Rat>{Rat(1), Rat(1), Rat(1), Rat(0)});
}

TEST_CASE("path sum constancy on images") {
  Lcg64 rng(23);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      SetFunction f = random_supermodular(n, rng);
      SupermodularityVector s = apply_transform(f);
      std::vector<Rat> m = color_weights(f);
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 1);
      do {
        CHECK(path_sum(s, order) == m[order.front() - 1]);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("image membership") {
  Lcg64 rng(29);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(in_image(apply_transform(testing::random_set_function(4, rng))));

  SupermodularityVector bad(3);
  bad.at(0, 1, 2) = 1;
  auto violation = image_violation(bad);
  REQUIRE(violation.has_value());
  CHECK_FALSE(in_image(bad));

  SupermodularityVector ones(4);
  for (Rat& e : ones.entries()) e = 1;
  CHECK(in_image(ones));
}

TEST_CASE("reconstruct") {
  SupermodularityVector ones(3);
  for (Rat& e : ones.entries()) e = 1;
  SetFunction f = reconstruct(ones);
  CHECK(f == alpha(3, 1) + alpha(3, 2));
  CHECK(f.value(0b011) == 1);
  CHECK(f.value(0b111) == 3);

  CHECK(reconstruct(SupermodularityVector(4)) == SetFunction(4));

  SupermodularityVector bad(3);
  bad.at(0, 1, 2) = 1;
  CHECK_THROWS_AS(reconstruct(bad), NotInImage);
}

TEST_CASE("reconstruct roundtrip") {
  Lcg64 rng(31);
  for (int n = 3; n <= 5; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      SetFunction f = random_supermodular(n, rng);
      SetFunction g = reconstruct(apply_transform(f));
      CHECK(equivalent(f, g));
      if (is_modular(f)) continue;
      // Exact equality for representatives vanishing on small sets.
      SetFunction h = f - modular_part(f).to_set_function();
      CHECK(reconstruct(apply_transform(h)) == h);
    }
}

TEST_CASE("kernel of the transform is the modular functions") {
  for (unsigned code = 0; code < 256; ++code) {
    SetFunction f = SetFunction::from(
        3, [code](SubsetMask s) { return Rat(((code >> s) & 1) ? 1 : -1); });
    CHECK(apply_transform(f).is_zero() == is_modular(f));
  }
  Lcg64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    SetFunction f = testing::random_set_function(4, rng);
    CHECK(apply_transform(f).is_zero() == is_modular(f));
  }
}

TEST_CASE("image dimension is 2^n - n - 1") {
  for (int n = 3; n <= 5; ++n) {
    RatMatrix t = transform_matrix(n);
    CHECK(rank(std::move(t)) == (std::size_t{1} << n) - n - 1);
  }
}

TEST_CASE("conditions (1), (2), (3) agree") {
  Lcg64 rng(41);
  for (int n = 3; n <= 4; ++n) {
    RatMatrix t = transform_matrix(n);
    for (int trial = 0; trial < 100; ++trial) {
      // Half random noise, half true images.
      SupermodularityVector s = (trial % 2 == 0)
          ? random_vector(n, rng)
          : apply_transform(testing::random_set_function(n, rng));
      bool c3 = in_image(s);
      bool c2 = path_sums_constant(s);
      RatMatrix cols(s.entries().size(), RatVec(std::size_t{1} << n));
      for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = t[i];
      bool c1 = is_solvable(cols, s.entries());
      CHECK(c3 == c2);
      CHECK(c3 == c1);
    }
  }
}

TEST_CASE("complexity") {
  CHECK(complexity_of(alpha(3, 1)) == 1);
  CHECK(complexity_of(alpha(3, 1) + alpha(3, 2)) == 2);
  CHECK(complexity_of(Rat(7) * alpha(3, 1)) == 1);
  ModularFunction m{Rat(0), {Rat(1), Rat(1), Rat(1)}};
  CHECK_THROWS_AS(complexity_of(m.to_set_function()), ModularInput);
}
