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

#ifndef QTK_RANDOM_HPP
#define QTK_RANDOM_HPP

#include <cstdint>
#include <random>

#include "qtk/moebius.hpp"

namespace qtk {

/// Deterministic generator of field elements, polynomials and maps.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() noexcept { return rng_; }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);

  Elem element(const Field& f);
  Elem nonzero(const Field& f);
  /// Uniform among polynomials of degree exactly d (d = 0 gives a nonzero constant).
  Polynomial polynomial(const Field& f, std::size_t d);
  Polynomial monic(const Field& f, std::size_t d);
  Polynomial monic_irreducible(const Field& f, std::size_t d);
  /// A valid g/h, retried until coprime with max degree 2.
  QuadRationalExpr quad_expr(const Field& f);
  MoebiusMap moebius(const Field& f);

 private:
  std::mt19937_64 rng_;
};

}  // namespace qtk

#endif  // QTK_RANDOM_HPP
