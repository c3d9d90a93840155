/*
   Copyright 2026 The qtk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qtk/random.hpp"

#include "qtk/factor.hpp"

namespace qtk {

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

Elem Sampler::element(const Field& f) { return static_cast<Elem>(uniform(0, f.q() - 1)); }

Elem Sampler::nonzero(const Field& f) { return static_cast<Elem>(uniform(1, f.q() - 1)); }

Polynomial Sampler::polynomial(const Field& f, std::size_t d) {
  std::vector<Elem> c(d + 1);
  for (std::size_t i = 0; i < d; ++i) c[i] = element(f);
  c[d] = nonzero(f);
  return {f, std::move(c)};
}

Polynomial Sampler::monic(const Field& f, std::size_t d) { return polynomial(f, d).monic(); }

Polynomial Sampler::monic_irreducible(const Field& f, std::size_t d) {
  if (d == 0) throw Error(Errc::DegreeZero, "no irreducible of degree 0");
  for (;;) {
    Polynomial p = monic(f, d);
    if (is_irreducible(p)) return p;
  }
}

QuadRationalExpr Sampler::quad_expr(const Field& f) {
  for (;;) {
    Polynomial g(f, {element(f), element(f), element(f)});
    Polynomial h(f, {element(f), element(f), element(f)});
    if (g.is_zero() || h.is_zero()) continue;
    if (g.degree() < Degree(2) && h.degree() < Degree(2)) continue;
    if (!gcd(g, h).is_constant()) continue;
    return {g, h};
  }
}

MoebiusMap Sampler::moebius(const Field& f) {
  for (;;) {
    Elem a = element(f), b = element(f), c = element(f), d = element(f);
    if (f.sub(f.mul(a, d), f.mul(b, c)) != 0) return {f, a, b, c, d};
  }
}

}  // namespace qtk
