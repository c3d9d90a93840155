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

#ifndef QTK_QUAD_TRANSFORM_HPP
#define QTK_QUAD_TRANSFORM_HPP

#include <cstdint>

#include "qtk/moebius.hpp"
#include "qtk/polynomial.hpp"

namespace qtk {

/// Coefficients of the involution x -> (bx - c)/(ax - b).
struct Triple {
  Elem a = 0;
  Elem b = 0;
  Elem c = 0;
  bool operator==(const Triple&) const noexcept = default;
};

/// b^2 - ac.
Elem triple_determinant(const Field& f, const Triple& t);
/// a x^2 - 2b x + c, whose roots are the fixed points of the involution.
Polynomial fixed_point_polynomial(const Field& f, const Triple& t);

/// sum_i p_i num^i den^(n - i) for n = deg p: the denominator-cleared
/// substitution den^n * p(num/den).
Polynomial substitute_rational(const Polynomial& p, const Polynomial& num, const Polynomial& den);

/// (cx + d)^N * F((ax + b)/(cx + d)) with the matrix entries used as given
/// (no projective rescaling), N >= deg F.
Polynomial substitute_fractional_linear(const Polynomial& F, Elem a, Elem b, Elem c, Elem d, std::size_t N);

/// x^(deg F) * F(1/x).
Polynomial reciprocal(const Polynomial& F);

struct TransformResult {
  Polynomial result;
  bool degree_dropped = false;
  bool normalized_monic = false;
};

/// f_R = h^(deg f) * f(g/h).  The degree drops below 2 deg f exactly when
/// h2 != 0 and f(g2/h2) = 0.
TransformResult transform(const Polynomial& f, const QuadRationalExpr& r, bool normalize_monic = false);

/// x^(2n) F(sigma/x) = sigma^n F(x), checked as b_(n-k) = sigma^k b_(n+k).
bool is_sigma_self_reciprocal(const Polynomial& F, Elem sigma);

/// (ax - b)^(2n) F((bx - c)/(ax - b)) = (b^2 - ac)^n F(x) as a polynomial identity.
bool is_invariant_generalized(const Polynomial& F, const Triple& t);

/// The root multiset of F in its splitting field is closed under
/// xi -> (b xi - c)/(a xi - b), multiplicities included.
bool roots_orbit_check(const Polynomial& F, const Triple& t);

struct DicksonParams {
  unsigned n = 0;
  Elem a = 0;
};

/// n/(n-i) * C(n-i, i), the integer weight of (-a)^i x^(n-2i) in D_n; the
/// n = 0 convention gives 2.
BigInt dickson_weight(unsigned n, unsigned i);

/// Dickson polynomial of the first kind, D_n(x, a).
Polynomial dickson(const Field& f, const DicksonParams& params);

/// f of degree n with F = x^n f(x + sigma/x).  Uses the closed-form
/// coefficient formula in odd characteristic and a linear solve otherwise.
Polynomial reconstruct(const Polynomial& F, Elem sigma);
/// Closed form; throws Char2ClosedFormUnavailable in characteristic 2.
Polynomial reconstruct_closed_form(const Polynomial& F, Elem sigma);
/// Linear solve in the n+1 coefficients of f; valid in every characteristic.
Polynomial reconstruct_linear(const Polynomial& F, Elem sigma);

/// Number of monic irreducible f of degree n whose transform is irreducible
/// of degree 2n.
std::uint64_t count_irreducible_images(const QuadRationalExpr& r, std::size_t n);

enum class Side { Pre, Post };

/// Checks r2 = r o m (or m o r) and that r and r2 yield the same number of
/// irreducible transforms of degree-n irreducibles, n > 1.
bool count_preserving_bijections_check(const QuadRationalExpr& r, const QuadRationalExpr& r2,
                                       const MoebiusMap& m, Side side, std::size_t n);

}  // namespace qtk

#endif  // QTK_QUAD_TRANSFORM_HPP
