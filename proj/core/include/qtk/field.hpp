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

#ifndef QTK_FIELD_HPP
#define QTK_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qtk/bigint.hpp"
#include "qtk/errors.hpp"

namespace qtk {

/// Packed field element: the coordinates (a_0, ..., a_{k-1}) in the
/// polynomial basis 1, t, ..., t^{k-1}, stored as sum a_i p^i.
using Elem = std::uint32_t;

namespace detail {
struct FieldData;
}

/// GF(p^k) with the canonical modulus: the least monic irreducible of
/// degree k over GF(p), coefficient tuples compared from the constant term
/// upward.  Instances are interned, so equal (p, k) share one table.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  static Field make(std::uint32_t p, std::uint32_t k = 1);
  /// Accepts "p^k" or a bare "p".
  /// "p^k", or a prime power q written out ("9").
  static Field parse(std::string_view text);

  std::uint32_t p() const noexcept;
  std::uint32_t k() const noexcept;
  std::uint32_t q() const noexcept;
  bool is_prime_field() const noexcept { return k() == 1; }
  bool char2() const noexcept { return p() == 2; }
  bool odd() const noexcept { return p() != 2; }
  /// k+1 residues, constant term first; monic.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::string name() const;

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool contains(Elem e) const noexcept { return e < q(); }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long v) const noexcept;
  Elem from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Elem e) const;

  /// Position of e in coordinate-lexicographic order (a_0 most significant).
  std::uint32_t rank(Elem e) const noexcept;
  Elem unrank(std::uint32_t r) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  Elem pow(Elem a, const BigInt& e) const;

  /// Euler's criterion for odd q; every element is a square in characteristic 2.
  bool is_square(Elem a) const;
  /// Least nonsquare in coordinate-lexicographic order (odd q only).
  Elem least_nonsquare() const;

  std::string format(Elem e) const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.d_ == b.d_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// An element together with its owning field.  Arithmetic between elements
/// of different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Field f, Elem v);
  static FieldElement from_int(const Field& f, long long v) { return {f, f.from_int(v)}; }

  const Field& field() const noexcept { return field_; }
  Elem value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  std::vector<std::uint32_t> coords() const { return field_.coords(v_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(v_)}; }
  FieldElement inverse() const { return {field_, field_.inv(v_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }
  FieldElement pow(const BigInt& e) const { return {field_, field_.pow(v_, e)}; }

  bool operator==(const FieldElement& o) const noexcept {
    return field_ == o.field_ && v_ == o.v_;
  }

  std::string to_string() const { return field_.format(v_); }

 private:
  Field field_;
  Elem v_;
};

/// Throws ZeroInput for s = 0.
bool is_square(const FieldElement& s);

/// Fixed embedding GF(p^k) -> GF(p^{km}) sending the source generator t to
/// the least root (coordinate-lexicographic) of the source modulus.
class Embedding {
 public:
  Embedding(const Field& source, const Field& target);

  const Field& source() const noexcept { return source_; }
  const Field& target() const noexcept { return target_; }
  Elem operator()(Elem e) const;

 private:
  Field source_;
  Field target_;
  std::vector<Elem> generator_powers_;
};

FieldElement embed(const FieldElement& e, const Field& target);

}  // namespace qtk

#endif  // QTK_FIELD_HPP
