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

#ifndef QTK_POLYNOMIAL_HPP
#define QTK_POLYNOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "qtk/bigint.hpp"
#include "qtk/field.hpp"

namespace qtk {

/// Degree of a polynomial; the zero polynomial has the distinguished degree
/// "minus infinity", which compares below every finite degree and has no
/// integer value.
class Degree {
 public:
  static constexpr Degree neg_inf() noexcept { return Degree(); }
  constexpr explicit Degree(std::size_t d) noexcept : finite_(true), d_(d) {}

  constexpr bool is_neg_inf() const noexcept { return !finite_; }
  std::size_t value() const {
    if (!finite_) throw Error(Errc::ZeroPolynomial, "degree of the zero polynomial");
    return d_;
  }

  constexpr bool operator==(const Degree&) const noexcept = default;
  constexpr std::strong_ordering operator<=>(const Degree& o) const noexcept {
    if (finite_ != o.finite_) return finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return d_ <=> o.d_;
  }

 private:
  constexpr Degree() noexcept = default;
  bool finite_ = false;
  std::size_t d_ = 0;
};

/// Dense univariate polynomial over GF(q); coefficients ascending, no
/// trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(std::move(f)) {}
  Polynomial(Field f, std::vector<Elem> coeffs);
  /// Integer coefficients, reduced into the prime subfield.
  static Polynomial from_ints(const Field& f, std::initializer_list<long long> coeffs);
  static Polynomial from_ints(const Field& f, const std::vector<long long>& coeffs);
  static Polynomial constant(const Field& f, Elem c) { return {f, {c}}; }
  static Polynomial monomial(const Field& f, Elem c, std::size_t degree);
  static Polynomial x(const Field& f) { return monomial(f, 1, 1); }

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  Degree degree() const noexcept { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
  /// Throws ZeroPolynomial for the zero polynomial.
  std::size_t deg() const { return degree().value(); }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{0}; }
  Elem lead() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }

  Polynomial monic() const;
  Polynomial scale(Elem s) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  bool operator==(const Polynomial& o) const noexcept { return field_ == o.field_ && c_ == o.c_; }

 private:
  void trim() noexcept;
  Field field_;
  std::vector<Elem> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

void require_same_field(const Polynomial& a, const Polynomial& b);

/// (quotient, remainder) with deg remainder < deg divisor.
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

/// Monic gcd; throws BothZero when both inputs vanish.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial derivative(const Polynomial& p);

Elem eval(const Polynomial& p, Elem a);
/// Evaluates at an element of the coefficient field or of an extension of it.
FieldElement eval(const Polynomial& p, const FieldElement& a);

/// p(inner(x)).
Polynomial compose(const Polynomial& p, const Polynomial& inner);
Polynomial pow(const Polynomial& base, std::uint64_t e);
Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial pow_mod(const Polynomial& base, const BigInt& e, const Polynomial& m);
/// x^(q^n) mod m by n successive q-th powers.
Polynomial x_pow_q_power_mod(std::uint64_t n, const Polynomial& m);

/// Coefficientwise image under a field embedding.
Polynomial map_coefficients(const Polynomial& p, const Embedding& emb);

}  // namespace qtk

#endif  // QTK_POLYNOMIAL_HPP
