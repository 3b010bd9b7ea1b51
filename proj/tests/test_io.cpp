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

#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "supermod/json_io.hpp"
#include "supermod/supermodular_cone.hpp"
#include "supermod/twolayer.hpp"

using namespace supermod;

TEST_CASE("rational strings") {
  CHECK(to_string(rat(3, 6)) == "1/2");
  CHECK(to_string(Rat(-7)) == "-7");
  CHECK(parse_rational("22/7") == rat(22, 7));
  CHECK(parse_rational("-5") == Rat(-5));
  CHECK(parse_rational("4/6") == rat(2, 3));
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
}

TEST_CASE("set function json roundtrip") {
  Lcg64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    SetFunction f = testing::random_set_function(3, rng);
    f.value(5) = rat(7, 3);
    CHECK(set_function_from_json(set_function_to_json(f)) == f);
  }

  Json j = set_function_to_json(alpha(3, 1));
  CHECK(j["n"] == 3);
  CHECK(j["values"].size() == 8);

  SECTION("missing subset rejected") {
    j["values"].erase(0);
    CHECK_THROWS_AS(set_function_from_json(j), ParseError);
  }
  SECTION("duplicate subset rejected") {
    j["values"].push_back(j["values"][0]);
    CHECK_THROWS_AS(set_function_from_json(j), ParseError);
  }
  SECTION("out-of-range subset rejected") {
    j["values"][0]["set"] = Json::array({4});
    CHECK_THROWS_AS(set_function_from_json(j), ParseError);
  }
}

TEST_CASE("supermodularity vector json roundtrip") {
  SupermodularityVector s = apply_transform(alpha(4, 2) + beta(4, 1, 3));
  SupermodularityVector back =
      supermodularity_vector_from_json(supermodularity_vector_to_json(s));
  CHECK(back == s);

  Json j = supermodularity_vector_to_json(apply_transform(alpha(3, 1)));
  CHECK(j["entries"].size() == 6);
  j["entries"].erase(0);
  CHECK_THROWS_AS(supermodularity_vector_from_json(j), ParseError);
}

TEST_CASE("antichain json") {
  Antichain a{3, {mask_of({1}), mask_of({2, 3})}};
  a.canonicalize();
  CHECK(antichain_from_json(antichain_to_json(a)) == a);

  Json bad{{"n", 2}, {"sets", Json::array({Json::array({1}),
                                           Json::array({1, 2})})}};
  CHECK_THROWS_AS(antichain_from_json(bad), ParseError);
}

TEST_CASE("matroid json") {
  Matroid m(3, {mask_of({1}), mask_of({2}), mask_of({3})});
  Matroid back = matroid_from_json(matroid_to_json(m));
  CHECK(back == m);
}

TEST_CASE("balanced vector json") {
  BalancedVector v(4);
  v.entry(mask_of({1})) = 2;
  v.entry(mask_of({2, 3})) = rat(1, 2);
  CHECK(balanced_vector_from_json(balanced_vector_to_json(v)) == v);
}

TEST_CASE("multiset text format") {
  std::istringstream in("1\n1\n2,3\n2,4\n# comment\n\n3,4\n");
  SubsetMultiset m = multiset_from_text(in, 4);
  CHECK(m.counts().at(mask_of({1})) == 2);
  CHECK(m.counts().at(mask_of({2, 3})) == 1);
  CHECK(m.counts().size() == 4);

  std::istringstream again(multiset_to_text(m));
  SubsetMultiset back = multiset_from_text(again, 4);
  CHECK(back.counts() == m.counts());

  std::istringstream bad("1,x\n");
  CHECK_THROWS_AS(multiset_from_text(bad, 4), ParseError);
  std::istringstream range("9\n");
  CHECK_THROWS_AS(multiset_from_text(range, 4), ParseError);
}

TEST_CASE("serialized enumeration is deterministic") {
  auto dump = [](const std::vector<SetFunction>& fs) {
    std::string out;
    for (const SetFunction& f : fs) out += set_function_to_json(f).dump() + "\n";
    return out;
  };
  DDOptions two;
  two.threads = 2;
  CHECK(dump(enumerate_irreducible_supermodular(3)) ==
        dump(enumerate_irreducible_supermodular(3, two)));
}
