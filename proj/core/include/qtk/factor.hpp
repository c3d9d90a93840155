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

#ifndef QTK_FACTOR_HPP
#define QTK_FACTOR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qtk/polynomial.hpp"

namespace qtk {

/// Largest q^d for which the enumerations below will run.
inline constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 22;

/// Rabin's test: x^(q^n) = x mod p and gcd(x^(q^(n/r)) - x, p) = 1 for every
/// prime r dividing n = deg p.  Throws DegreeZero when deg p < 1.
bool is_irreducible(const Polynomial& p);

/// Visits every monic polynomial of degree d, in coefficient-lexicographic
/// order (constant term most significant, elements by Field::rank).
void for_each_monic(const Field& f, std::size_t d, const std::function<void(const Polynomial&)>& visit);

void for_each_monic_irreducible(const Field& f, std::size_t d,
                                const std::function<void(const Polynomial&)>& visit);
std::vector<Polynomial> enumerate_monic_irreducible(const Field& f, std::size_t d);

/// Gauss's count (1/d) sum_{e | d} mu(e) q^(d/e).
BigInt gauss_count(std::uint64_t q, std::uint64_t d);

struct Factorization {
  Elem unit = 0;
  /// Monic irreducible factors, sorted by (degree, coefficients), with multiplicities.
  std::vector<std::pair<Polynomial, std::size_t>> factors;

  Polynomial expand(const Field& f) const;
  std::size_t distinct_count() const noexcept { return factors.size(); }
  bool squarefree() const noexcept;
};

/// Complete factorization: squarefree decomposition, distinct-degree and
/// equal-degree (Cantor-Zassenhaus) splitting.  Throws BoundTooSmall when an
/// irreducible factor of degree greater than `bound` is present.
Factorization factorize(const Polynomial& p, std::size_t bound);

/// Same contract, by trial division against the enumerated irreducibles of
/// degree 1..bound.  Only practical for small inputs.
Factorization factorize_trial(const Polynomial& p, std::size_t bound);

/// Strict weak ordering used for deterministic factor lists.
bool poly_less(const Polynomial& a, const Polynomial& b);

}  // namespace qtk

#endif  // QTK_FACTOR_HPP
