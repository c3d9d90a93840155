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

#ifndef QTK_LINALG_HPP
#define QTK_LINALG_HPP

#include <optional>
#include <vector>

#include "qtk/polynomial.hpp"

namespace qtk {

/// Solves rows * x = rhs over f by Gaussian elimination.  Returns one
/// solution (free variables set to zero) or nullopt when inconsistent.
std::optional<std::vector<Elem>> solve_linear(const Field& f, std::vector<std::vector<Elem>> rows,
                                              std::vector<Elem> rhs);

/// Coefficients c with sum c_i * basis[i] = target, if target lies in the span.
std::optional<std::vector<Elem>> solve_in_span(const std::vector<Polynomial>& basis, const Polynomial& target);

}  // namespace qtk

#endif  // QTK_LINALG_HPP
