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

#ifndef QTK_MOEBIUS_HPP
#define QTK_MOEBIUS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtk/polynomial.hpp"
#include "qtk/rational_function.hpp"
#include "qtk/text_format.hpp"

namespace qtk {

/// x -> (ax + b)/(cx + d), an element of PGL(2, q).  Stored scaled so that
/// the first nonzero entry of (a, b, c, d) is 1, which makes the
/// representative of each projective class unique.
class MoebiusMap {
 public:
  MoebiusMap(Field f, Elem a, Elem b, Elem c, Elem d);

  static MoebiusMap identity(const Field& f) { return {f, 1, 0, 0, 1}; }
  static MoebiusMap inversion(const Field& f) { return {f, 0, 1, 1, 0}; }
  /// x -> alpha x + beta, alpha != 0.
  static MoebiusMap affine(const Field& f, Elem alpha, Elem beta);
  static MoebiusMap parse(const Field& f, std::string_view text);

  const Field& field() const noexcept { return field_; }
  Elem a() const noexcept { return m_[0]; }
  Elem b() const noexcept { return m_[1]; }
  Elem c() const noexcept { return m_[2]; }
  Elem d() const noexcept { return m_[3]; }

  /// (*this)(other(x)).
  MoebiusMap compose(const MoebiusMap& other) const;
  MoebiusMap inverse() const;
  MoebiusMap power(unsigned n) const;
  bool is_identity() const noexcept { return *this == identity(field_); }
  /// Value at x; nullopt stands for the point at infinity.
  std::optional<Elem> apply(Elem x) const;
  RationalFunction as_rational() const;

  std::string to_string() const;
  bool operator==(const MoebiusMap& o) const noexcept { return field_ == o.field_ && m_ == o.m_; }

 private:
  Field field_;
  std::array<Elem, 4> m_;
};

inline MoebiusMap compose(const MoebiusMap& outer, const MoebiusMap& inner) { return outer.compose(inner); }

/// Some M with M o from o M^-1 = to, by exhaustive search over PGL(2, q).
std::optional<MoebiusMap> find_conjugator(const MoebiusMap& from, const MoebiusMap& to);

/// R(x) = g(x)/h(x) with g, h coprime and max(deg g, deg h) = 2.  The pair is
/// scaled so that h is monic when deg h >= 1, and g is monic otherwise.
class QuadRationalExpr {
 public:
  /// Throws DegenerateExpression unless gcd(g, h) = 1 and max degree is 2.
  QuadRationalExpr(Polynomial g, Polynomial h);
  static QuadRationalExpr parse(const Field& f, std::string_view text, PolyFormat fmt = PolyFormat::Auto);
  /// (x^2 + sigma)/x.
  static QuadRationalExpr sigma_form(const Field& f, Elem sigma);
  /// x^2 / 1.
  static QuadRationalExpr x_squared(const Field& f);

  const Field& field() const noexcept { return g_.field(); }
  const Polynomial& g() const noexcept { return g_; }
  const Polynomial& h() const noexcept { return h_; }
  Elem g0() const noexcept { return g_.coeff(0); }
  Elem g1() const noexcept { return g_.coeff(1); }
  Elem g2() const noexcept { return g_.coeff(2); }
  Elem h0() const noexcept { return h_.coeff(0); }
  Elem h1() const noexcept { return h_.coeff(1); }
  Elem h2() const noexcept { return h_.coeff(2); }

  /// g' = h' = 0, which forces characteristic 2 and g, h in GF(q)[x^2].
  bool derivatives_vanish() const;
  /// g'h - gh', equal to a x^2 - 2b x + c for the cross-product triple.
  Polynomial wronskian() const;

  std::string to_string() const;
  bool operator==(const QuadRationalExpr& o) const noexcept { return g_ == o.g_ && h_ == o.h_; }

 private:
  Polynomial g_;
  Polynomial h_;
};

/// R o m.
QuadRationalExpr apply_pre(const QuadRationalExpr& r, const MoebiusMap& m);
/// m o R.
QuadRationalExpr apply_post(const QuadRationalExpr& r, const MoebiusMap& m);

enum class StepKind { PreAffine, PreInversion, PostAffine, PostInversion };

struct TrailStep {
  StepKind kind;
  Elem alpha = 1;
  Elem beta = 0;

  static TrailStep pre_affine(Elem alpha, Elem beta) { return {StepKind::PreAffine, alpha, beta}; }
  static TrailStep pre_inversion() { return {StepKind::PreInversion}; }
  static TrailStep post_affine(Elem alpha, Elem beta) { return {StepKind::PostAffine, alpha, beta}; }
  static TrailStep post_inversion() { return {StepKind::PostInversion}; }

  bool is_pre() const noexcept { return kind == StepKind::PreAffine || kind == StepKind::PreInversion; }
  bool is_trivial() const noexcept {
    return (kind == StepKind::PreAffine || kind == StepKind::PostAffine) && alpha == 1 && beta == 0;
  }
  MoebiusMap as_map(const Field& f) const;
  std::string to_string(const Field& f) const;
  bool operator==(const TrailStep&) const noexcept = default;
};

QuadRationalExpr apply_step(const QuadRationalExpr& r, const TrailStep& step);

struct ReductionTrail {
  QuadRationalExpr start;
  QuadRationalExpr end;
  std::vector<TrailStep> steps;

  /// Applies the steps to start; equals end for every trail produced here.
  QuadRationalExpr replay() const;
};

struct CanonicalForm {
  enum class Kind { XPlusSigmaOverX, XSquared };
  Kind kind;
  Elem sigma = 0;  // meaningful for XPlusSigmaOverX only

  QuadRationalExpr as_expr(const Field& f) const;
};

struct Reduction {
  CanonicalForm form;
  ReductionTrail trail;
};

/// Brings R to (x^2 + sigma)/x, or to x^2 in characteristic 2, by affine
/// maps and inversions on both sides.
Reduction reduce_canonical(const QuadRationalExpr& r);

enum class SigmaClass { Square, NonSquare, XSquared };

std::string_view to_string(SigmaClass c) noexcept;

/// Square class of disc(g'h - gh'), after pre-inversion when the quadratic
/// coefficient of g'h - gh' vanishes; XSquared when g' = h' = 0.
SigmaClass classify_sigma(const QuadRationalExpr& r);

/// 1 for the square class, the least nonsquare for the other.
Elem class_representative(const Field& f, SigmaClass c);

}  // namespace qtk

#endif  // QTK_MOEBIUS_HPP
