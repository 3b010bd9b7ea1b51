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

#ifndef SUPERMOD_SUPERMODULAR_CONE_HPP_
#define SUPERMOD_SUPERMODULAR_CONE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "supermod/cone.hpp"
#include "supermod/set_function.hpp"
#include "supermod/transform.hpp"

namespace supermod {

// The supermodular cone in standard coordinates: one coordinate f(I) per
// subset with |I| >= 2 (canonical order), one inequality s_{I,J} >= 0 per
// close pair.
inline ConeH supermodular_cone(int n) {
  check_ground_set(n);
  if (n < 2) throw GroundSetOutOfRange("supermodular cone needs n >= 2");
  int dim = (1 << n) - n - 1;
  // Position of each subset of size >= 2 within the canonical order.
  std::vector<int> coord(std::size_t{1} << n, -1);
  int next = 0;
  for (SubsetMask s : canonical_subsets(n))
    if (set_size(s) >= 2) coord[s] = next++;
  ConeH cone;
  cone.dim = dim;
  for (const ClosePair& p : close_pairs(n)) {
    RatVec row(dim, Rat(0));
    auto add = [&](SubsetMask s, int delta) {
      if (coord[s] >= 0) row[coord[s]] += delta;
    };
    add(p.meet, +1);
    add(p.join(), +1);
    add(p.first(), -1);
    add(p.second(), -1);
    cone.inequalities.push_back(std::move(row));
  }
  return cone;
}

// Lifts a cone direction (values on |I| >= 2 in canonical order) back to the
// standard set function that vanishes on small sets.
inline SetFunction set_function_from_upper(int n, const IntVec& upper) {
  SetFunction f(n);
  std::size_t k = 0;
  for (SubsetMask s : canonical_subsets(n))
    if (set_size(s) >= 2) f.value(s) = Rat(upper[k++]);
  if (k != upper.size()) throw DimensionMismatch();
  return f;
}

// Standard representatives of all irreducible supermodular functions on [n],
// canonically ordered. Counts for n = 3, 4, 5 are 5, 37, 117978.
inline std::vector<SetFunction> enumerate_irreducible_supermodular(
    int n, DDOptions opts = {}) {
  std::vector<SetFunction> out;
  for (const Ray& r : extreme_rays(supermodular_cone(n), opts))
    out.push_back(set_function_from_upper(n, r.direction));
  return out;  // ray order is already canonical for these coordinates
}

struct IrreducibilityCertificate {
  bool irreducible = false;
  std::vector<int> tight_pairs;  // indices into the canonical close pair list
  std::size_t tight_rank = 0;
  std::size_t required_rank = 0;  // 2^n - n - 2
};

// A supermodular non-modular f is irreducible iff its tight close pairs span
// a subspace of rank 2^n - n - 2 in the standard coordinates.
inline IrreducibilityCertificate is_irreducible_supermodular(
    const SetFunction& f) {
  if (!is_supermodular(f)) throw NotSupermodular();
  SetFunction g = standardize(f);  // throws ModularInput on modular f
  int n = g.n();
  ConeH cone = supermodular_cone(n);
  SupermodularityVector s = apply_transform(g);
  IrreducibilityCertificate cert;
  cert.required_rank = (std::size_t{1} << n) - n - 2;
  RatMatrix tight_rows;
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    if (s.entries()[i] == 0) {
      cert.tight_pairs.push_back(static_cast<int>(i));
      tight_rows.push_back(cone.inequalities[i]);
    }
  }
  cert.tight_rank = rank(std::move(tight_rows));
  cert.irreducible = cert.tight_rank == cert.required_rank;
  return cert;
}

// One term of a conic decomposition: coefficient and ray index.
using DecompositionTerm = std::pair<Rat, std::size_t>;

// Writes f (up to a modular summand) as a nonnegative combination of the
// given complete irreducible list, by recursive facet descent: repeatedly
// subtract, as much as possible, a ray lying on the minimal face containing
// the residual. At most dim = 2^n - n - 1 terms are produced.
inline std::vector<DecompositionTerm> conic_decompose(
    const SetFunction& f, const std::vector<SetFunction>& rays) {
  if (!is_supermodular(f)) throw NotSupermodular();
  SetFunction g = f - modular_part(f).to_set_function();
  std::vector<Rat> residual = apply_transform(g).entries();
  std::vector<std::vector<Rat>> ray_s;
  ray_s.reserve(rays.size());
  for (const SetFunction& r : rays)
    ray_s.push_back(apply_transform(r).entries());

  std::vector<DecompositionTerm> terms;
  auto is_zero = [](const std::vector<Rat>& v) {
    for (const Rat& x : v)
      if (x != 0) return false;
    return true;
  };
  while (!is_zero(residual)) {
    std::size_t chosen = rays.size();
    for (std::size_t i = 0; i < rays.size() && chosen == rays.size(); ++i) {
      bool on_face = true;
      for (std::size_t p = 0; p < residual.size(); ++p)
        if (residual[p] == 0 && ray_s[i][p] != 0) {
          on_face = false;
          break;
        }
      if (on_face) chosen = i;
    }
    if (chosen == rays.size())
      throw Infeasible("no ray on the minimal face; ray list incomplete?");
    // Largest step keeping the residual supermodular.
    Rat step;
    bool have = false;
    for (std::size_t p = 0; p < residual.size(); ++p) {
      if (ray_s[chosen][p] <= 0) continue;
      Rat q = residual[p] / ray_s[chosen][p];
      if (!have || q < step) {
        step = q;
        have = true;
      }
    }
    if (!have) throw Infeasible("ray with zero supermodularity vector");
    for (std::size_t p = 0; p < residual.size(); ++p)
      residual[p] -= step * ray_s[chosen][p];
    terms.emplace_back(step, chosen);
  }
  std::sort(terms.begin(), terms.end(),
            [](const DecompositionTerm& a, const DecompositionTerm& b) {
              return a.second < b.second;
            });
  return terms;
}

// Largest complexity among the irreducible supermodular functions on [n].
inline Int max_enumerated_complexity(int n, DDOptions opts = {}) {
  Int best = 0;
  for (const SetFunction& f : enumerate_irreducible_supermodular(n, opts)) {
    Int c = complexity_of(f);
    if (c > best) best = c;
  }
  return best;
}

}  // namespace supermod

#endif  // SUPERMOD_SUPERMODULAR_CONE_HPP_
