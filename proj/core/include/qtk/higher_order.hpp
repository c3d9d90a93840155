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

#ifndef QTK_HIGHER_ORDER_HPP
#define QTK_HIGHER_ORDER_HPP

#include <string_view>

#include "qtk/moebius.hpp"
#include "qtk/rational_function.hpp"

namespace qtk {

enum class HigherOrder { Three, Four, TranslationP };

std::string_view to_string(HigherOrder o) noexcept;

/// F = weight^n * f(core) with core = num/weight.
struct HigherKernel {
  HigherOrder order;
  Polynomial weight;
  Polynomial num;
  /// Order 3 in characteristic 3, where x -> 1/(1 - x) is conjugate to a translation.
  bool flagged = false;

  std::size_t degree() const { return num.deg(); }
  RationalFunction core() const { return {num, weight}; }
};

/// Order 3: (x^3 - 3x + 1)/(x(x - 1)).  Order 4: (x^4 - 3x^2 + 2x - 1/4)/(x(x - 1)(x - 1/2)),
/// Char2Unsupported in characteristic 2.  Translation: x^p - x.
HigherKernel higher_kernel(const Field& f, HigherOrder order);

/// x -> 1/(1 - x).
MoebiusMap order3_map(const Field& f);
/// x -> 1/(2 - 2x); Char2Unsupported in characteristic 2.
MoebiusMap order4_map(const Field& f);
/// x + 1/(2 - 2x) + (1 - x)/(1 - 2x) + (2x - 1)/(2x).
RationalFunction order4_iterate_sum(const Field& f);

struct HigherTransformResult {
  Polynomial result;
  bool degree_dropped = false;
};

HigherTransformResult transform_higher(const Polynomial& f, HigherOrder order);
Polynomial transform_order3(const Polynomial& f);
Polynomial transform_order4(const Polynomial& f);
/// f(x^p - x).
Polynomial transform_translation(const Polynomial& f);

/// (x - 1)^(3n) F(1/(1 - x)) = F(x); DegreeNotMultipleOf3 unless deg F = 3n.
bool is_invariant_order3(const Polynomial& F);
/// (-1/4)^n (2 - 2x)^(4n) F(1/(2 - 2x)) = F(x); DegreeNotMultipleOf4 unless deg F = 4n.
bool is_invariant_order4(const Polynomial& F);
/// F(x + 1) = F(x).
bool is_invariant_translation(const Polynomial& F);
bool is_invariant_higher(const Polynomial& F, HigherOrder order);

/// f with transform_higher(f, order) = F, by a linear solve in the
/// coefficients of f.  NotInvariant when the predicate fails.
Polynomial reconstruct_higher(const Polynomial& F, HigherOrder order);

}  // namespace qtk

#endif  // QTK_HIGHER_ORDER_HPP
