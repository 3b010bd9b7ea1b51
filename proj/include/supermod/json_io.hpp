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

#ifndef SUPERMOD_JSON_IO_HPP_
#define SUPERMOD_JSON_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "supermod/balanced.hpp"
#include "supermod/matroid.hpp"
#include "supermod/nondecreasing.hpp"
#include "supermod/set_function.hpp"
#include "supermod/transform.hpp"

namespace supermod {

using Json = nlohmann::json;

inline Json subset_to_json(SubsetMask s) { return Json(elements_of(s)); }

inline SubsetMask subset_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("subset must be an array");
  return mask_of(j.get<std::vector<int>>());
}

// { "n": int, "values": [ {"set": [...], "value": "p/q"}, ... ] }
// Every subset must appear exactly once.
inline Json set_function_to_json(const SetFunction& f) {
  Json values = Json::array();
  for (SubsetMask s : canonical_subsets(f.n()))
    values.push_back({{"set", subset_to_json(s)},
                      {"value", to_string(f.value(s))}});
  return Json{{"n", f.n()}, {"values", values}};
}

inline SetFunction set_function_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("values"))
    throw ParseError("set function needs \"n\" and \"values\"");
  int n = j.at("n").get<int>();
  check_ground_set(n);
  SetFunction f(n);
  std::vector<bool> seen(std::size_t{1} << n, false);
  for (const Json& item : j.at("values")) {
    SubsetMask s = subset_from_json(item.at("set"));
    if (s > full_set(n)) throw ParseError("subset outside ground set");
    if (seen[s]) throw ParseError("duplicate subset entry");
    seen[s] = true;
    f.value(s) = parse_rational(item.at("value").get<std::string>());
  }
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (!seen[s]) throw ParseError("missing subset entry");
  return f;
}

// { "n": int, "entries": [ {"meet": [...], "add": [a, b], "value": "p/q"} ] }
inline Json supermodularity_vector_to_json(const SupermodularityVector& s) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < s.pairs().size(); ++i) {
    const ClosePair& p = s.pairs()[i];
    entries.push_back({{"meet", subset_to_json(p.meet)},
                       {"add", Json::array({p.a, p.b})},
                       {"value", to_string(s.entries()[i])}});
  }
  return Json{{"n", s.n()}, {"entries", entries}};
}

inline SupermodularityVector supermodularity_vector_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  SupermodularityVector s(n);
  std::vector<bool> seen(s.pairs().size(), false);
  for (const Json& item : j.at("entries")) {
    SubsetMask meet = subset_from_json(item.at("meet"));
    auto add = item.at("add").get<std::vector<int>>();
    if (add.size() != 2) throw ParseError("\"add\" must hold two elements");
    int idx = s.pairs().index(meet, add[0], add[1]);
    if (seen[idx]) throw ParseError("duplicate close pair entry");
    seen[idx] = true;
    s.entries()[idx] = parse_rational(item.at("value").get<std::string>());
  }
  for (bool b : seen)
    if (!b) throw ParseError("missing close pair entry");
  return s;
}

// { "n": int, "sets": [[...], ...] }
inline Json antichain_to_json(const Antichain& a) {
  Json sets = Json::array();
  for (SubsetMask s : a.sets) sets.push_back(subset_to_json(s));
  return Json{{"n", a.n}, {"sets", sets}};
}

inline Antichain antichain_from_json(const Json& j) {
  Antichain a;
  a.n = j.at("n").get<int>();
  check_ground_set(a.n);
  for (const Json& s : j.at("sets")) a.sets.push_back(subset_from_json(s));
  a.canonicalize();
  if (!a.valid()) throw ParseError("sets do not form an antichain");
  return a;
}

// { "n": int, "bases": [[...], ...] }
inline Json matroid_to_json(const Matroid& m) {
  Json bases = Json::array();
  for (SubsetMask b : m.bases()) bases.push_back(subset_to_json(b));
  return Json{{"n", m.n()}, {"bases", bases}};
}

inline Matroid matroid_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::vector<SubsetMask> bases;
  for (const Json& b : j.at("bases")) bases.push_back(subset_from_json(b));
  return Matroid(n, std::move(bases));
}

// { "N": int, "entries": [ {"set": [...], "value": "p/q"}, ... ] }
// Only the support is listed.
inline Json balanced_vector_to_json(const BalancedVector& v) {
  Json entries = Json::array();
  for (SubsetMask s : v.support())
    entries.push_back({{"set", subset_to_json(s)},
                       {"value", to_string(v.entry(s))}});
  return Json{{"N", v.n()}, {"entries", entries}};
}

inline BalancedVector balanced_vector_from_json(const Json& j) {
  int n = j.at("N").get<int>();
  BalancedVector v(n);
  for (const Json& item : j.at("entries")) {
    SubsetMask s = subset_from_json(item.at("set"));
    if (s == 0) throw ParseError("empty set not allowed");
    v.entry(s) = parse_rational(item.at("value").get<std::string>());
  }
  return v;
}

// Multiset text format: one set per line, elements comma separated
// (1-based); repeated lines accumulate multiplicity. Blank lines and lines
// starting with '#' are skipped.
inline SubsetMultiset multiset_from_text(std::istream& in, int n) {
  SubsetMultiset m(n);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<int> elems;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        elems.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw ParseError("bad multiset line: " + line);
      }
    }
    if (elems.empty()) throw ParseError("empty multiset line");
    SubsetMask s = mask_of(elems);
    if (s > full_set(n)) throw ParseError("element outside ground set");
    m.add(s);
  }
  return m;
}

inline std::string multiset_to_text(const SubsetMultiset& m) {
  std::string out;
  for (const auto& [s, count] : m.counts()) {
    std::string line;
    for (int e : elements_of(s)) {
      if (!line.empty()) line += ',';
      line += std::to_string(e);
    }
    for (long c = 0; c < count; ++c) out += line + "\n";
  }
  return out;
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace supermod

#endif  // SUPERMOD_JSON_IO_HPP_
