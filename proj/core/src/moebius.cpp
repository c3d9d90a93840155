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

#include "qtk/moebius.hpp"

namespace qtk {

MoebiusMap::MoebiusMap(Field f, Elem a, Elem b, Elem c, Elem d) : field_(std::move(f)), m_{a, b, c, d} {
  for (Elem e : m_)
    if (!field_.contains(e)) throw Error(Errc::InvalidArgument, "matrix entry out of range");
  if (field_.sub(field_.mul(a, d), field_.mul(b, c)) == 0)
    throw Error(Errc::InvalidArgument, "singular Moebius matrix");
  for (Elem e : m_) {
    if (e == 0) continue;
    const Elem inv = field_.inv(e);
    for (Elem& x : m_) x = field_.mul(x, inv);
    break;
  }
}

MoebiusMap MoebiusMap::affine(const Field& f, Elem alpha, Elem beta) {
  if (alpha == 0) throw Error(Errc::InvalidArgument, "affine map needs alpha != 0");
  return {f, alpha, beta, 0, 1};
}

MoebiusMap MoebiusMap::parse(const Field& f, std::string_view text) {
  const auto m = parse_matrix(f, text);
  return {f, m[0], m[1], m[2], m[3]};
}

MoebiusMap MoebiusMap::compose(const MoebiusMap& o) const {
  if (!(field_ == o.field_)) throw Error(Errc::FieldMismatch, "Moebius maps over different fields");
  const Field& f = field_;
  auto dot = [&](Elem x, Elem y, Elem z, Elem w) { return f.add(f.mul(x, y), f.mul(z, w)); };
  return {f, dot(a(), o.a(), b(), o.c()), dot(a(), o.b(), b(), o.d()), dot(c(), o.a(), d(), o.c()),
          dot(c(), o.b(), d(), o.d())};
}

MoebiusMap MoebiusMap::inverse() const {
  const Field& f = field_;
  return {f, d(), f.neg(b()), f.neg(c()), a()};
}

MoebiusMap MoebiusMap::power(unsigned n) const {
  MoebiusMap out = identity(field_);
  for (unsigned i = 0; i < n; ++i) out = out.compose(*this);
  return out;
}

std::optional<Elem> MoebiusMap::apply(Elem x) const {
  const Field& f = field_;
  const Elem den = f.add(f.mul(c(), x), d());
  if (den == 0) return std::nullopt;
  return f.div(f.add(f.mul(a(), x), b()), den);
}

RationalFunction MoebiusMap::as_rational() const {
  return {Polynomial(field_, {b(), a()}), Polynomial(field_, {d(), c()})};
}

std::string MoebiusMap::to_string() const {
  const Field& f = field_;
  return "[" + f.format(a()) + " " + f.format(b()) + "; " + f.format(c()) + " " + f.format(d()) + "]";
}

std::optional<MoebiusMap> find_conjugator(const MoebiusMap& from, const MoebiusMap& to) {
  const Field& f = from.field();
  const std::uint32_t q = f.q();
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        for (Elem d = 0; d < q; ++d) {
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
          const MoebiusMap m(f, a, b, c, d);
          if (m.a() != a || m.b() != b || m.c() != c || m.d() != d) continue;  // not the normalized representative
          if (m.compose(from) == to.compose(m)) return m;
        }
  return std::nullopt;
}

QuadRationalExpr::QuadRationalExpr(Polynomial g, Polynomial h) : g_(std::move(g)), h_(std::move(h)) {
  require_same_field(g_, h_);
  const Degree top = std::max(g_.degree(), h_.degree());
  if (top != Degree(2)) throw Error(Errc::DegenerateExpression, "max(deg g, deg h) must be 2");
  if (g_.is_zero() || h_.is_zero() || gcd(g_, h_).deg() != 0)
    throw Error(Errc::DegenerateExpression, "g and h must be coprime");
  const Elem lead = h_.deg() >= 1 ? h_.lead() : g_.lead();
  const Elem inv = g_.field().inv(lead);
  g_ = g_.scale(inv);
  h_ = h_.scale(inv);
}

QuadRationalExpr QuadRationalExpr::parse(const Field& f, std::string_view text, PolyFormat fmt) {
  auto [g, h] = parse_fraction(f, text, fmt);
  return {std::move(g), std::move(h)};
}

QuadRationalExpr QuadRationalExpr::sigma_form(const Field& f, Elem sigma) {
  if (sigma == 0) throw Error(Errc::ZeroSigma, "sigma must be nonzero");
  return {Polynomial(f, {sigma, 0, 1}), Polynomial::x(f)};
}

QuadRationalExpr QuadRationalExpr::x_squared(const Field& f) {
  return {Polynomial::monomial(f, 1, 2), Polynomial::constant(f, 1)};
}

bool QuadRationalExpr::derivatives_vanish() const {
  return derivative(g_).is_zero() && derivative(h_).is_zero();
}

Polynomial QuadRationalExpr::wronskian() const { return derivative(g_) * h_ - g_ * derivative(h_); }

std::string QuadRationalExpr::to_string() const { return format_poly(g_) + " / " + format_poly(h_); }

namespace {

// sum_i p_i num^i den^(2-i) for a quadratic p.
Polynomial homogeneous_substitute(const Polynomial& p, const Polynomial& num, const Polynomial& den) {
  return (num * num).scale(p.coeff(2)) + (num * den).scale(p.coeff(1)) + (den * den).scale(p.coeff(0));
}

QuadRationalExpr checked(Polynomial g, Polynomial h) {
  try {
    return {std::move(g), std::move(h)};
  } catch (const Error& e) {
    throw Error(Errc::DegenerateResult, e.what());
  }
}

}  // namespace

QuadRationalExpr apply_pre(const QuadRationalExpr& r, const MoebiusMap& m) {
  if (!(r.field() == m.field())) throw Error(Errc::FieldMismatch, "expression and map over different fields");
  const Field& f = r.field();
  const Polynomial num(f, {m.b(), m.a()});
  const Polynomial den(f, {m.d(), m.c()});
  return checked(homogeneous_substitute(r.g(), num, den), homogeneous_substitute(r.h(), num, den));
}

QuadRationalExpr apply_post(const QuadRationalExpr& r, const MoebiusMap& m) {
  if (!(r.field() == m.field())) throw Error(Errc::FieldMismatch, "expression and map over different fields");
  return checked(r.g().scale(m.a()) + r.h().scale(m.b()), r.g().scale(m.c()) + r.h().scale(m.d()));
}

MoebiusMap TrailStep::as_map(const Field& f) const {
  switch (kind) {
    case StepKind::PreAffine:
    case StepKind::PostAffine:
      return MoebiusMap::affine(f, alpha, beta);
    case StepKind::PreInversion:
    case StepKind::PostInversion:
      return MoebiusMap::inversion(f);
  }
  return MoebiusMap::identity(f);
}

std::string TrailStep::to_string(const Field& f) const {
  switch (kind) {
    case StepKind::PreAffine:
      return "PreAffine(" + f.format(alpha) + "," + f.format(beta) + ")";
    case StepKind::PostAffine:
      return "PostAffine(" + f.format(alpha) + "," + f.format(beta) + ")";
    case StepKind::PreInversion:
      return "PreInversion";
    case StepKind::PostInversion:
      return "PostInversion";
  }
  return "?";
}

QuadRationalExpr apply_step(const QuadRationalExpr& r, const TrailStep& step) {
  const MoebiusMap m = step.as_map(r.field());
  return step.is_pre() ? apply_pre(r, m) : apply_post(r, m);
}

QuadRationalExpr ReductionTrail::replay() const {
  QuadRationalExpr cur = start;
  for (const auto& s : steps) cur = apply_step(cur, s);
  return cur;
}

QuadRationalExpr CanonicalForm::as_expr(const Field& f) const {
  return kind == Kind::XSquared ? QuadRationalExpr::x_squared(f) : QuadRationalExpr::sigma_form(f, sigma);
}

Reduction reduce_canonical(const QuadRationalExpr& r) {
  const Field& f = r.field();
  ReductionTrail trail{r, r, {}};
  QuadRationalExpr cur = r;
  auto push = [&](const TrailStep& s) {
    if (s.is_trivial()) return;
    cur = apply_step(cur, s);
    trail.steps.push_back(s);
  };
  auto quad_minor = [&] { return f.sub(f.mul(cur.g2(), cur.h1()), f.mul(cur.g1(), cur.h2())); };
  auto const_minor = [&] { return f.sub(f.mul(cur.g1(), cur.h0()), f.mul(cur.g0(), cur.h1())); };
  // Subtract g2/h2 and invert: leaves no quadratic term in the denominator.
  auto kill_h2 = [&] {
    push(TrailStep::post_affine(1, f.neg(f.div(cur.g2(), cur.h2()))));
    push(TrailStep::post_inversion());
  };

  if (quad_minor() == 0 && const_minor() == 0) {
    // Here g1 = h1 = 0.
    if (f.odd()) {
      push(TrailStep::pre_affine(1, 1));
    } else {
      if (cur.h2() != 0) kill_h2();
      const Elem alpha = f.div(cur.h0(), cur.g2());
      push(TrailStep::post_affine(alpha, f.neg(f.div(cur.g0(), cur.g2()))));
      trail.end = cur;
      return {{CanonicalForm::Kind::XSquared, 0}, std::move(trail)};
    }
  }
  if (quad_minor() == 0) push(TrailStep::pre_inversion());
  if (cur.h2() != 0) kill_h2();
  // Now h = h1 x + h0 with h1 != 0.
  push(TrailStep::pre_affine(1, f.neg(f.div(cur.h0(), cur.h1()))));
  push(TrailStep::post_affine(f.div(cur.h1(), cur.g2()), 0));
  push(TrailStep::post_affine(1, f.neg(cur.g1())));
  trail.end = cur;
  return {{CanonicalForm::Kind::XPlusSigmaOverX, cur.g0()}, std::move(trail)};
}

std::string_view to_string(SigmaClass c) noexcept {
  switch (c) {
    case SigmaClass::Square: return "SquareClass";
    case SigmaClass::NonSquare: return "NonSquareClass";
    case SigmaClass::XSquared: return "XSquaredClass";
  }
  return "?";
}

SigmaClass classify_sigma(const QuadRationalExpr& r) {
  const Field& f = r.field();
  if (f.char2()) return r.derivatives_vanish() ? SigmaClass::XSquared : SigmaClass::Square;
  Polynomial w = r.wronskian();
  if (w.coeff(2) == 0) w = apply_pre(r, MoebiusMap::inversion(f)).wronskian();
  const Elem disc = f.sub(f.mul(w.coeff(1), w.coeff(1)), f.mul(f.from_int(4), f.mul(w.coeff(2), w.coeff(0))));
  return f.is_square(disc) ? SigmaClass::Square : SigmaClass::NonSquare;
}

Elem class_representative(const Field& f, SigmaClass c) {
  switch (c) {
    case SigmaClass::Square: return 1;
    case SigmaClass::NonSquare: return f.least_nonsquare();
    case SigmaClass::XSquared: break;
  }
  throw Error(Errc::InvalidArgument, "the x^2 class has no sigma");
}

}  // namespace qtk
