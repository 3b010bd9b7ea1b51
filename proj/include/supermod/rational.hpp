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

#ifndef SUPERMOD_RATIONAL_HPP_
#define SUPERMOD_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <vector>

#include "supermod/errors.hpp"

namespace supermod {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Exact "p/q" string; integers serialize without the "/q" part.
inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rational(const std::string& text) {
  try {
    Rat q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational: " + text);
  }
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// gcd of |entries|; 0 for an all-zero (or empty) vector.
inline Int vector_gcd(const std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

// Divides through by the gcd of the entries. No-op on the zero vector.
inline void make_primitive(std::vector<Int>& v) {
  Int g = vector_gcd(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

// The unique positive c such that c*v is integer with entry gcd 1.
// Throws ZeroVector on v = 0.
inline Rat primitive_scale(const std::vector<Rat>& v) {
  Int den = 1, num = 0;
  for (const Rat& x : v) den = lcm(den, x.get_den());
  for (const Rat& x : v) num = gcd(num, Int(x.get_num() * (den / x.get_den())));
  if (num == 0) throw ZeroVector();
  Rat c(den, num);
  c.canonicalize();
  return c;
}

// Scales a nonzero rational vector to primitive integer form.
inline std::vector<Int> primitive_integer_form(const std::vector<Rat>& v) {
  Rat c = primitive_scale(v);
  std::vector<Int> out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    Rat y = x * c;
    out.push_back(y.get_num());
  }
  return out;
}

}  // namespace supermod

#endif  // SUPERMOD_RATIONAL_HPP_
