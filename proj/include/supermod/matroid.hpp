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

#ifndef SUPERMOD_MATROID_HPP_
#define SUPERMOD_MATROID_HPP_

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "supermod/nondecreasing.hpp"
#include "supermod/set_function.hpp"
#include "supermod/subsets.hpp"

namespace supermod {

// Exhaustive verification of the basis exchange axiom.
inline bool check_exchange(const std::vector<SubsetMask>& bases) {
  if (bases.empty()) return false;
  int r = set_size(bases.front());
  for (SubsetMask b : bases)
    if (set_size(b) != r) return false;
  auto is_basis = [&](SubsetMask s) {
    return std::find(bases.begin(), bases.end(), s) != bases.end();
  };
  for (SubsetMask a : bases)
    for (SubsetMask b : bases) {
      for (SubsetMask rest = a & ~b; rest != 0; rest &= rest - 1) {
        int elem_a = std::countr_zero(rest) + 1;
        bool found = false;
        for (SubsetMask cand = b & ~a; cand != 0 && !found; cand &= cand - 1) {
          int elem_b = std::countr_zero(cand) + 1;
          if (is_basis(with_element(without_element(a, elem_a), elem_b)))
            found = true;
        }
        if (!found) return false;
      }
    }
  return true;
}

// A labeled matroid given by its set of bases.
class Matroid {
 public:
  Matroid(int n, std::vector<SubsetMask> bases)
      : n_(n), bases_(std::move(bases)) {
    check_ground_set(n);
    std::sort(bases_.begin(), bases_.end(), canonical_less);
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
    if (!check_exchange(bases_)) throw Error("basis exchange axiom fails");
    for (SubsetMask b : bases_)
      if (b > full_set(n)) throw ElementOutOfRange();
  }

  int n() const { return n_; }
  const std::vector<SubsetMask>& bases() const { return bases_; }
  int rank() const { return set_size(bases_.front()); }

  // Standard rank: the largest intersection with a basis.
  int rank(SubsetMask i) const {
    int best = 0;
    for (SubsetMask b : bases_) best = std::max(best, set_size(i & b));
    return best;
  }

  int nullity(SubsetMask i) const { return set_size(i) - rank(i); }

  SubsetMask loops() const {
    SubsetMask in_some = 0;
    for (SubsetMask b : bases_) in_some |= b;
    return full_set(n_) & ~in_some;
  }

  SubsetMask coloops() const {
    SubsetMask in_all = full_set(n_);
    for (SubsetMask b : bases_) in_all &= b;
    return in_all;
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;
  friend bool operator<(const Matroid& a, const Matroid& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return std::lexicographical_compare(a.bases_.begin(), a.bases_.end(),
                                        b.bases_.begin(), b.bases_.end(),
                                        canonical_less);
  }

 private:
  int n_;
  std::vector<SubsetMask> bases_;
};

// Whether the bases factor as {B1 | B2 : B1 in bases|E1, B2 in bases|E2}
// across the partition (e1, e2).
inline bool splits_as_product(const Matroid& m, SubsetMask e1, SubsetMask e2) {
  if (m.rank(e1) + m.rank(e2) != m.rank(e1 | e2)) return false;
  std::vector<SubsetMask> parts1, parts2;
  for (SubsetMask b : m.bases()) {
    parts1.push_back(b & e1);
    parts2.push_back(b & e2);
  }
  auto dedup = [](std::vector<SubsetMask>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedup(parts1);
  dedup(parts2);
  if (parts1.size() * parts2.size() != m.bases().size()) return false;
  for (SubsetMask b1 : parts1)
    for (SubsetMask b2 : parts2)
      if (!std::binary_search(m.bases().begin(), m.bases().end(), b1 | b2,
                              canonical_less))
        return false;
  return true;
}

// Searches proper partitions (E1, E2) whose restrictions multiply to the
// basis set; returns a witness or nothing when the matroid is irreducible.
inline std::optional<std::pair<SubsetMask, SubsetMask>> is_reducible_matroid(
    const Matroid& m) {
  int n = m.n();
  if (n < 2) return std::nullopt;
  SubsetMask top = full_set(n);
  for (SubsetMask e1 = 1; e1 < top; ++e1) {
    if (!contains(e1, 1)) continue;  // fix element 1 in E1 to halve the scan
    SubsetMask e2 = top & ~e1;
    if (splits_as_product(m, e1, e2)) return std::make_pair(e1, e2);
  }
  return std::nullopt;
}

// A product split in which both factors have positive nullity. A free
// factor (all coloops, e.g. a single coloop) contributes the zero function
// to nullity, so only a split of this stronger kind decomposes the nullity
// function into two nonzero supermodular summands. Consequently, for a
// loopless matroid with nonmodular nullity, the nullity function is an
// irreducible supermodular function exactly when no such split exists --
// even though a coloop already makes the matroid itself reducible.
inline std::optional<std::pair<SubsetMask, SubsetMask>> nullity_reducing_split(
    const Matroid& m) {
  int n = m.n();
  if (n < 2) return std::nullopt;
  SubsetMask top = full_set(n);
  for (SubsetMask e1 = 1; e1 < top; ++e1) {
    if (!contains(e1, 1)) continue;
    SubsetMask e2 = top & ~e1;
    if (m.rank(e1) == set_size(e1) || m.rank(e2) == set_size(e2)) continue;
    if (splits_as_product(m, e1, e2)) return std::make_pair(e1, e2);
  }
  return std::nullopt;
}

// The nullity function of a loopless matroid: a simple, standard
// supermodular function.
inline SetFunction matroid_to_supermodular(const Matroid& m) {
  if (m.loops() != 0) throw HasLoop();
  return SetFunction::from(
      m.n(), [&m](SubsetMask s) { return Rat(m.nullity(s)); });
}

// Whether every discrete derivative is constant or an irreducible
// nondecreasing function.
inline bool is_simple(const SetFunction& f) {
  if (!is_supermodular(f)) throw NotSupermodular();
  for (int i = 1; i <= f.n(); ++i) {
    SetFunction d = discrete_derivative(f, i);
    bool constant = std::all_of(d.values().begin(), d.values().end(),
                                [&](const Rat& v) { return v == d.value(0); });
    if (constant) continue;
    if (!is_irreducible_nondecreasing(d)) return false;
  }
  return true;
}

// Inverse of matroid_to_supermodular: the GP vertices of a simple standard
// f are 0/1 points whose supports are the complements of the bases.
inline Matroid supermodular_to_matroid(const SetFunction& f) {
  if (!is_supermodular(f)) throw NotSupermodular();
  if (!is_simple(f)) throw NotSimple();
  for (SubsetMask s = 0; s < (SubsetMask{1} << f.n()); ++s)
    if (set_size(s) <= 1 && f.value(s) != 0)
      throw Error("requires the standard representative");
  std::vector<SubsetMask> bases;
  for (const std::vector<Rat>& x : gp_vertices(f)) {
    SubsetMask support = 0;
    for (int i = 1; i <= f.n(); ++i) {
      if (x[i - 1] == 0) continue;
      if (x[i - 1] != 1) throw NotZeroOne();
      support = with_element(support, i);
    }
    bases.push_back(full_set(f.n()) & ~support);
  }
  Matroid m(f.n(), std::move(bases));
  if (!(matroid_to_supermodular(m) == f))
    throw Error("matroid round trip failed");
  return m;
}

// Brute force over basis families, one rank layer at a time.
inline std::vector<Matroid> enumerate_loopless_matroids(int n) {
  check_ground_set(n);
  if (n > 5) throw ParamOutOfRange("matroid enumeration is exhaustive; n <= 5");
  std::vector<Matroid> out;
  for (int r = 0; r <= n; ++r) {
    std::vector<SubsetMask> layer;
    for (SubsetMask s = 0; s <= full_set(n); ++s)
      if (set_size(s) == r) layer.push_back(s);
    std::uint64_t families = std::uint64_t{1} << layer.size();
    for (std::uint64_t code = 1; code < families; ++code) {
      std::vector<SubsetMask> bases;
      SubsetMask covered = 0;
      for (std::size_t i = 0; i < layer.size(); ++i)
        if ((code >> i) & 1) {
          bases.push_back(layer[i]);
          covered |= layer[i];
        }
      if (covered != full_set(n)) continue;  // has a loop
      if (!check_exchange(bases)) continue;
      out.emplace_back(n, std::move(bases));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace supermod

#endif  // SUPERMOD_MATROID_HPP_
