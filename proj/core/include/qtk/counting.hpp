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

#ifndef QTK_COUNTING_HPP
#define QTK_COUNTING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qtk/bigint.hpp"
#include "qtk/moebius.hpp"

namespace qtk {

/// Self-reciprocal irreducible monic polynomials, R = (x^2 + 1)/x.
struct CarlitzSrim {};
/// R = (x^2 + sigma)/x.
struct SigmaForm {
  Elem sigma = 1;
};
struct GeneralQuadratic {
  QuadRationalExpr r;
};
/// Irreducible monic quadratics in the pencil spanned by g and h.
struct LinearInput {
  QuadRationalExpr r;
};
using CountVariant = std::variant<CarlitzSrim, SigmaForm, GeneralQuadratic, LinearInput>;

struct CountQuery {
  Field field;
  std::uint64_t n = 1;
  CountVariant variant;
};

struct CountResult {
  BigInt value;
  int epsilon = 0;
  int delta = 0;
  std::string formula_branch;
};

int moebius_mu(std::uint64_t d);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_power_of_two(std::uint64_t n) noexcept;
/// q = p^k for a prime p.
bool is_prime_power(std::uint64_t q) noexcept;

/// g(n) = sum over odd d | n of mu(d) f(n/d), for every key n of f_values.
/// Throws MissingDivisorValue if some n/d is absent.
std::map<std::uint64_t, BigInt> moebius_invert_odd(const std::map<std::uint64_t, BigInt>& f_values);

/// +1 or -1 by the quadratic character of sigma for odd q, 0 for even q.
int epsilon_of(const Field& f, Elem sigma);

CountResult count_carlitz(std::uint64_t q, std::uint64_t n);
CountResult count_sigma(const Field& f, std::uint64_t n, Elem sigma);
/// Requires n > 1.
CountResult count_ahmadi(std::uint64_t n, const QuadRationalExpr& r);
CountResult count_linear_inputs(const QuadRationalExpr& r);
CountResult count_corollary(const Field& f, std::uint64_t n, Elem sigma);
/// Dispatches to the closed form matching the variant.
CountResult count_formula(const CountQuery& query);

/// Exhaustive count: transforms every monic irreducible of degree n and
/// tests irreducibility; for LinearInput, scans the projective pencil
/// {g - alpha h : alpha in GF(q)} together with h.
std::uint64_t brute_count(const CountQuery& query);
/// Monic irreducible F of degree 2n with x^(2n) F(sigma/x) = sigma^n F(x),
/// found by enumerating all monic polynomials of degree 2n.
std::uint64_t brute_count_invariant(const Field& f, std::uint64_t n, Elem sigma);

}  // namespace qtk

#endif  // QTK_COUNTING_HPP
