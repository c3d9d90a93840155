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

#ifndef QTK_TEXT_FORMAT_HPP
#define QTK_TEXT_FORMAT_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "qtk/field.hpp"
#include "qtk/polynomial.hpp"

namespace qtk {

// Text conventions shared by the library and the CLI:
//   element      "2" (reduced into the prime subfield) or "[a0 a1 ... a(k-1)]"
//   polynomial   "c0,c1,...,cd" ascending, or human form "x^2+2*x+1"
//   expression   "g / h"
//   Moebius map  "[a b; c d]"

enum class PolyFormat { Auto, Coefficients, Human };

Elem parse_element(const Field& f, std::string_view text);

std::string format_poly(const Polynomial& p);
std::string format_human(const Polynomial& p, char var = 'x');
Polynomial parse_poly(const Field& f, std::string_view text, PolyFormat fmt = PolyFormat::Auto);

/// Splits "g / h" at the top-level slash and parses both sides.
std::pair<Polynomial, Polynomial> parse_fraction(const Field& f, std::string_view text,
                                                 PolyFormat fmt = PolyFormat::Auto);

/// Row-major entries of "[a b; c d]".
std::array<Elem, 4> parse_matrix(const Field& f, std::string_view text);

}  // namespace qtk

#endif  // QTK_TEXT_FORMAT_HPP
