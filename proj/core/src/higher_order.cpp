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

#include "qtk/higher_order.hpp"

#include "qtk/linalg.hpp"
#include "qtk/quad_transform.hpp"

namespace qtk {

namespace {

void require_odd(const Field& f) {
  if (f.char2()) throw Error(Errc::Char2Unsupported, "order-4 kernel needs characteristic other than 2");
}

Polynomial lin(const Field& f, long long c0, long long c1) { return Polynomial::from_ints(f, {c0, c1}); }

}  // namespace

std::string_view to_string(HigherOrder o) noexcept {
  switch (o) {
    case HigherOrder::Three:
      return "order3";
    case HigherOrder::Four:
      return "order4";
    case HigherOrder::TranslationP:
      return "translation";
  }
  return "?";
}

HigherKernel higher_kernel(const Field& f, HigherOrder order) {
  switch (order) {
    case HigherOrder::Three:
      return {order, Polynomial::from_ints(f, {0, -1, 1}), Polynomial::from_ints(f, {1, -3, 0, 1}), f.p() == 3};
    case HigherOrder::Four: {
      require_odd(f);
      const Elem half = f.inv(f.from_int(2));
      Polynomial w = Polynomial::from_ints(f, {0, -1, 1}) * Polynomial(f, {f.neg(half), 1});
      Polynomial num(f, {f.neg(f.inv(f.from_int(4))), f.from_int(2), f.from_int(-3), 0, 1});
      return {order, w, num, false};
    }
    case HigherOrder::TranslationP:
      return {order, Polynomial::constant(f, 1),
              Polynomial::monomial(f, 1, f.p()) - Polynomial::x(f), false};
  }
  throw Error(Errc::InvalidArgument, "unknown kernel");
}

MoebiusMap order3_map(const Field& f) { return {f, 0, 1, f.neg(1), 1}; }

MoebiusMap order4_map(const Field& f) {
  require_odd(f);
  return {f, 0, 1, f.neg(f.from_int(2)), f.from_int(2)};
}

RationalFunction order4_iterate_sum(const Field& f) {
  require_odd(f);
  RationalFunction x(Polynomial::x(f));
  RationalFunction t1(Polynomial::constant(f, 1), lin(f, 2, -2));
  RationalFunction t2(lin(f, 1, -1), lin(f, 1, -2));
  RationalFunction t3(lin(f, -1, 2), lin(f, 0, 2));
  return x + t1 + t2 + t3;
}

HigherTransformResult transform_higher(const Polynomial& f, HigherOrder order) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot transform the zero polynomial");
  HigherKernel k = higher_kernel(f.field(), order);
  Polynomial F = substitute_rational(f, k.num, k.weight);
  return {F, F.degree() < Degree(k.degree() * f.deg())};
}

Polynomial transform_order3(const Polynomial& f) { return transform_higher(f, HigherOrder::Three).result; }
Polynomial transform_order4(const Polynomial& f) { return transform_higher(f, HigherOrder::Four).result; }
Polynomial transform_translation(const Polynomial& f) {
  return transform_higher(f, HigherOrder::TranslationP).result;
}

bool is_invariant_order3(const Polynomial& F) {
  if (F.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  if (F.deg() % 3 != 0) throw Error(Errc::DegreeNotMultipleOf3, "degree " + std::to_string(F.deg()));
  const Field& f = F.field();
  // (x - 1)^(3n) F(-1/(x - 1))
  Polynomial lhs = substitute_fractional_linear(F, 0, f.neg(1), 1, f.neg(1), F.deg());
  return lhs == F;
}

bool is_invariant_order4(const Polynomial& F) {
  const Field& f = F.field();
  require_odd(f);
  if (F.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  if (F.deg() % 4 != 0) throw Error(Errc::DegreeNotMultipleOf4, "degree " + std::to_string(F.deg()));
  const std::size_t n = F.deg() / 4;
  Polynomial lhs = substitute_fractional_linear(F, 0, 1, f.neg(f.from_int(2)), f.from_int(2), F.deg());
  const Elem scale = f.pow(f.neg(f.inv(f.from_int(4))), n);
  return lhs.scale(scale) == F;
}

bool is_invariant_translation(const Polynomial& F) {
  return compose(F, Polynomial::from_ints(F.field(), {1, 1})) == F;
}

bool is_invariant_higher(const Polynomial& F, HigherOrder order) {
  switch (order) {
    case HigherOrder::Three:
      return is_invariant_order3(F);
    case HigherOrder::Four:
      return is_invariant_order4(F);
    case HigherOrder::TranslationP:
      return is_invariant_translation(F);
  }
  return false;
}

Polynomial reconstruct_higher(const Polynomial& F, HigherOrder order) {
  if (F.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  const Field& f = F.field();
  HigherKernel k = higher_kernel(f, order);
  if (F.deg() % k.degree() != 0 || !is_invariant_higher(F, order)) {
    throw Error(Errc::NotInvariant, "F is not invariant under the " + std::string(to_string(order)) + " kernel");
  }
  const std::size_t n = F.deg() / k.degree();
  std::vector<Polynomial> basis;
  Polynomial np = Polynomial::constant(f, 1);
  for (std::size_t i = 0; i <= n; ++i) {
    basis.push_back(np * pow(k.weight, n - i));
    np *= k.num;
  }
  auto sol = solve_in_span(basis, F);
  if (!sol) throw Error(Errc::NoSolution, "invariant F outside the image of the kernel");
  Polynomial out(f, std::move(*sol));
  if (!(transform_higher(out, order).result == F)) {
    throw Error(Errc::IdentityViolated, "reconstruction does not transform back to F");
  }
  return out;
}

}  // namespace qtk
