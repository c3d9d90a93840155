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

#include "qtk/h_factor.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <json.hpp>

#include "qtk/counting.hpp"
#include "qtk/factor.hpp"
#include "qtk/text_format.hpp"

namespace qtk {

namespace {

std::uint64_t checked_q_power(const Field& f, std::uint64_t n, std::uint64_t degree_bound) {
  BigInt Q = ipow(f.q(), static_cast<unsigned>(std::min<std::uint64_t>(n, 64)));
  if (n > 64 || Q + 1 > degree_bound) {
    throw Error(Errc::SizeBoundExceeded, "q^n + 1 exceeds the degree bound " + std::to_string(degree_bound));
  }
  return static_cast<std::uint64_t>(Q);
}

bool degree_permitted(std::size_t d, std::uint64_t n) { return (2 * n) % d == 0 && n % d != 0; }

void add_check(HReport& rep, std::string name, bool passed, std::string detail = {}) {
  rep.checks.push_back({std::move(name), passed, std::move(detail)});
}

std::vector<Polynomial> sorted_unique(std::vector<Polynomial> v) {
  std::sort(v.begin(), v.end(), poly_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Monic irreducible transforms of every f of degree n/d, d odd.
std::vector<Polynomial> enumerate_images(const QuadRationalExpr& r, std::uint64_t n) {
  std::vector<Polynomial> out;
  for (std::uint64_t m : divisors(n)) {
    if ((n / m) % 2 == 0) continue;
    for_each_monic_irreducible(r.field(), m, [&](const Polynomial& f) {
      auto t = transform(f, r, true);
      if (!t.degree_dropped && is_irreducible(t.result)) out.push_back(t.result);
    });
  }
  return sorted_unique(std::move(out));
}

Polynomial substitute_map(const Polynomial& p, const MoebiusMap& m) {
  return substitute_fractional_linear(p, m.a(), m.b(), m.c(), m.d(), p.deg());
}

}  // namespace

std::uint64_t h_degree_bound() {
  if (const char* env = std::getenv("QTK_SIZE_BOUND")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
    }
  }
  return kDefaultHDegreeBound;
}

Triple cross_product_abc(const QuadRationalExpr& r) {
  const Field& f = r.field();
  return {f.sub(f.mul(r.g2(), r.h1()), f.mul(r.g1(), r.h2())), f.sub(f.mul(r.g0(), r.h2()), f.mul(r.g2(), r.h0())),
          f.sub(f.mul(r.g1(), r.h0()), f.mul(r.g0(), r.h1()))};
}

HSpec::HSpec(Field f, std::uint64_t n_, Triple t) : field(std::move(f)), n(n_), abc(t) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
  if (!field.contains(t.a) || !field.contains(t.b) || !field.contains(t.c)) {
    throw Error(Errc::InvalidArgument, "triple outside the field");
  }
  if (triple_determinant(field, abc) == 0) throw Error(Errc::SingularTriple, "b^2 - ac = 0");
  if (field.char2() && abc.a == 0 && abc.c == 0) {
    throw Error(Errc::Char2Degenerate, "a = c = 0 in characteristic 2");
  }
}

HSpec HSpec::from_expr(const QuadRationalExpr& r, std::uint64_t n) {
  HSpec s(r.field(), n, cross_product_abc(r));
  s.source = r;
  return s;
}

HSpec HSpec::from_sigma(const Field& f, Elem sigma, std::uint64_t n) {
  if (sigma == 0) throw Error(Errc::ZeroSigma, "sigma must be nonzero");
  return {f, n, Triple{1, 0, f.neg(sigma)}};
}

Polynomial build_h(const HSpec& spec, std::uint64_t degree_bound) {
  const Field& f = spec.field;
  const std::uint64_t Q = checked_q_power(f, spec.n, degree_bound);
  std::vector<Elem> c(Q + 2, 0);
  const Elem nb = f.neg(spec.abc.b);
  c[Q + 1] = spec.abc.a;
  c[Q] = f.add(c[Q], nb);
  c[1] = f.add(c[1], nb);
  c[0] = f.add(c[0], spec.abc.c);
  return {f, std::move(c)};
}

Polynomial build_h_meyn(const Field& f, Elem sigma, std::uint64_t n, std::uint64_t degree_bound) {
  if (!f.contains(sigma)) throw Error(Errc::InvalidArgument, "sigma outside the field");
  if (sigma == 0) throw Error(Errc::ZeroSigma, "sigma must be nonzero");
  const std::uint64_t Q = checked_q_power(f, n, degree_bound);
  Polynomial num = Polynomial::monomial(f, 1, Q + 1) - Polynomial::constant(f, sigma);
  Polynomial quad(f, {f.neg(sigma), 0, 1});
  Polynomial xq1 = pow_mod(Polynomial::x(f), BigInt(Q - 1), quad) - Polynomial::constant(f, 1);
  Polynomial d = gcd(quad, xq1);
  auto [quo, rem] = divrem(num, d);
  if (!rem.is_zero()) throw Error(Errc::IdentityViolated, "gcd does not divide x^(q^n+1) - sigma");
  return quo;
}

Elem h_squarefree_witness(const HSpec& spec, std::uint64_t degree_bound) {
  const Field& f = spec.field;
  const Triple& t = spec.abc;
  if (t.a == 0 && t.b == 0) throw Error(Errc::InvalidArgument, "a = b = 0");
  Polynomial H = build_h(spec, degree_bound);
  Polynomial w = Polynomial(f, {f.neg(t.b), t.a}) * derivative(H) - H.scale(t.a);
  const Elem expect = triple_determinant(f, t);
  if (!(w == Polynomial::constant(f, expect))) {
    throw Error(Errc::IdentityViolated, "(ax - b)H' - aH is not b^2 - ac");
  }
  return expect;
}

std::optional<Polynomial> match_transform(const Polynomial& F, const QuadRationalExpr& r) {
  require_same_field(F, r.g());
  if (F.is_zero() || F.deg() % 2 != 0) return std::nullopt;
  Reduction red = reduce_canonical(r);
  if (red.form.kind != CanonicalForm::Kind::XPlusSigmaOverX) return std::nullopt;
  const Field& f = r.field();
  Polynomial G = F.monic();
  for (const TrailStep& s : red.trail.steps) {
    if (s.is_pre()) G = substitute_map(G, s.as_map(f)).monic();
  }
  if (G.deg() != F.deg() || !is_sigma_self_reciprocal(G, red.form.sigma)) return std::nullopt;
  Polynomial g = reconstruct(G, red.form.sigma);
  for (auto it = red.trail.steps.rbegin(); it != red.trail.steps.rend(); ++it) {
    if (!it->is_pre()) g = substitute_map(g, it->as_map(f));
  }
  if (g.is_zero() || g.is_constant()) return std::nullopt;
  g = g.monic();
  auto t = transform(g, r, true);
  if (t.degree_dropped || !(t.result == F.monic())) return std::nullopt;
  return g;
}

DegreeSummary product_degree_summary(const HSpec& spec, std::uint64_t degree_bound) {
  const Field& f = spec.field;
  Polynomial H = build_h(spec, degree_bound);
  Polynomial w = fixed_point_polynomial(f, spec.abc);
  std::size_t gdeg = 0;
  if (!w.is_constant()) {
    Polynomial xq = x_pow_q_power_mod(spec.n, w) - Polynomial::x(f);
    gdeg = gcd(w, xq).deg();
  }
  DegreeSummary s;
  s.degree = H.deg() - gdeg;
  if (f.odd()) s.epsilon = f.is_square(triple_determinant(f, spec.abc)) ? 1 : -1;
  BigInt expect = ipow(f.q(), static_cast<unsigned>(spec.n));
  if (s.epsilon == 1 || (s.epsilon == -1 && spec.n % 2 == 0)) expect -= 1;
  if (s.epsilon == -1 && spec.n % 2 == 1) expect += 1;
  if (BigInt(s.degree) != expect) {
    throw Error(Errc::MismatchFound, "product degree " + std::to_string(s.degree) + " but q^n - eps^n = " + expect.str());
  }
  return s;
}

bool HReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

std::vector<std::string> HReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name + (c.detail.empty() ? "" : ": " + c.detail));
  }
  return out;
}

std::string HReport::to_json() const {
  using nlohmann::ordered_json;
  auto poly = [](const Polynomial& p) {
    return ordered_json{{"coeffs", format_poly(p)}, {"human", format_human(p)}, {"degree", p.deg()}};
  };
  ordered_json j;
  j["kind"] = kind;
  j["field"] = field.name();
  j["n"] = n;
  j["abc"] = {field.format(abc.a), field.format(abc.b), field.format(abc.c)};
  if (sigma) j["sigma"] = field.format(*sigma);
  if (source) j["source"] = source->to_string();
  j["h"] = poly(h);
  j["factors"] = ordered_json::array();
  for (const auto& e : factors) {
    ordered_json fe = poly(e.factor);
    fe["multiplicity"] = e.multiplicity;
    fe["exceptional"] = e.exceptional;
    fe["pole"] = e.pole;
    fe["f"] = e.f ? poly(*e.f) : ordered_json(nullptr);
    j["factors"].push_back(fe);
  }
  j["enumerated"] = ordered_json::array();
  for (const auto& p : enumerated) j["enumerated"].push_back(format_poly(p));
  j["f_degrees"] = ordered_json::object();
  for (const auto& [d, c] : f_degrees) j["f_degrees"][std::to_string(d)] = c;
  j["checks"] = ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["ok"] = ok();
  return j.dump();
}

HReport meyn_product_report(const Field& f, Elem sigma, std::uint64_t n, std::uint64_t degree_bound) {
  HReport rep{"meyn-product", f, n, Triple{1, 0, f.neg(sigma)}, sigma, std::nullopt, build_h_meyn(f, sigma, n, degree_bound),
              {}, {}, {}, {}};
  const QuadRationalExpr r = QuadRationalExpr::sigma_form(f, sigma);
  Factorization fac = factorize(rep.h, rep.h.deg());
  bool all_simple = true, all_irreducible = true, all_invariant = true, degrees_ok = true, all_matched = true;
  std::vector<Polynomial> from_h;
  for (const auto& [p, e] : fac.factors) {
    FactorEntry fe{p, e, false, false, std::nullopt};
    all_simple = all_simple && e == 1;
    all_irreducible = all_irreducible && p.is_monic() && is_irreducible(p);
    const bool inv = p.deg() % 2 == 0 && is_sigma_self_reciprocal(p, sigma);
    all_invariant = all_invariant && inv;
    degrees_ok = degrees_ok && degree_permitted(p.deg(), n);
    if (inv) fe.f = reconstruct(p, sigma);
    all_matched = all_matched && fe.f.has_value();
    if (fe.f) ++rep.f_degrees[fe.f->deg()];
    from_h.push_back(p);
    rep.factors.push_back(std::move(fe));
  }
  add_check(rep, "factors-simple", all_simple);
  add_check(rep, "factors-monic-irreducible", all_irreducible);
  add_check(rep, "factors-sigma-self-reciprocal", all_invariant);
  add_check(rep, "factor-degrees-divide-2n-not-n", degrees_ok);
  add_check(rep, "factors-reconstructed", all_matched);

  rep.enumerated = enumerate_images(r, n);
  Polynomial prod = Polynomial::constant(f, 1);
  for (const auto& p : rep.enumerated) prod *= p;
  add_check(rep, "product-equals-h", prod == rep.h.monic(),
            "enumerated product degree " + std::to_string(prod.deg()) + ", deg H " + std::to_string(rep.h.deg()));
  add_check(rep, "factor-set-equals-enumeration", sorted_unique(from_h) == rep.enumerated);
  return rep;
}

HReport meyn_generalized_report(const QuadRationalExpr& r, std::uint64_t n, std::uint64_t degree_bound) {
  const Field& f = r.field();
  HSpec spec = HSpec::from_expr(r, n);
  HReport rep{"meyn-generalized", f, n, spec.abc, std::nullopt, r, build_h(spec, degree_bound), {}, {}, {}, {}};

  Elem witness = 0;
  bool witness_ok = true;
  try {
    witness = h_squarefree_witness(spec, degree_bound);
  } catch (const Error& e) {
    if (e.code() != Errc::IdentityViolated) throw;
    witness_ok = false;
  }
  add_check(rep, "squarefree-witness", witness_ok, "b^2 - ac = " + f.format(witness));

  Polynomial w = fixed_point_polynomial(f, spec.abc);
  std::optional<Polynomial> exceptional;
  if (w.degree() == Degree(2) && is_irreducible(w)) exceptional = w.monic();
  std::optional<Polynomial> pole;
  if (r.h().degree() == Degree(2) && is_irreducible(r.h())) pole = r.h().monic();

  Factorization fac = factorize(rep.h, rep.h.deg());
  bool all_simple = true, degrees_ok = true, all_matched = true;
  std::size_t total = 0, transformed_degree = 0;
  std::vector<Polynomial> candidates;
  std::string unmatched;
  for (const auto& [p, e] : fac.factors) {
    FactorEntry fe{p, e, exceptional && p == *exceptional, false, std::nullopt};
    fe.pole = !fe.exceptional && pole && p == *pole;
    all_simple = all_simple && e == 1;
    total += p.deg() * e;
    if (p.deg() > 1 && !fe.exceptional) {
      degrees_ok = degrees_ok && degree_permitted(p.deg(), n);
      transformed_degree += p.deg() * e;
      if (fe.pole) {
        rep.factors.push_back(std::move(fe));
        continue;
      }
      fe.f = match_transform(p, r);
      if (fe.f) {
        ++rep.f_degrees[fe.f->deg()];
      } else {
        all_matched = false;
        unmatched += format_poly(p) + " ";
      }
      candidates.push_back(p);
    }
    rep.factors.push_back(std::move(fe));
  }
  add_check(rep, "factors-simple", all_simple);
  add_check(rep, "degree-sum", total == rep.h.deg());
  add_check(rep, "factor-degrees-divide-2n-not-n", degrees_ok);
  add_check(rep, "factors-matched", all_matched, unmatched);

  rep.enumerated = enumerate_images(r, n);
  bool all_divide = true;
  for (const auto& p : rep.enumerated) all_divide = all_divide && divides(p, rep.h);
  add_check(rep, "enumerated-divide-h", all_divide);
  add_check(rep, "factor-set-equals-enumeration", sorted_unique(candidates) == rep.enumerated);

  bool summary_ok = true;
  std::string detail;
  try {
    DegreeSummary s = product_degree_summary(spec, degree_bound);
    summary_ok = s.degree == transformed_degree;
    detail = "summary " + std::to_string(s.degree) + ", factors " + std::to_string(transformed_degree);
  } catch (const Error& e) {
    if (e.code() != Errc::MismatchFound) throw;
    summary_ok = false;
    detail = e.what();
  }
  add_check(rep, "product-degree", summary_ok, detail);
  return rep;
}

namespace {

HReport throw_on_failure(HReport rep) {
  if (!rep.ok()) {
    std::string msg;
    for (const auto& s : rep.failures()) msg += s + "; ";
    throw Error(Errc::MismatchFound, msg);
  }
  return rep;
}

}  // namespace

HReport verify_meyn_product(const Field& f, Elem sigma, std::uint64_t n, std::uint64_t degree_bound) {
  return throw_on_failure(meyn_product_report(f, sigma, n, degree_bound));
}

HReport verify_meyn_generalized(const QuadRationalExpr& r, std::uint64_t n, std::uint64_t degree_bound) {
  return throw_on_failure(meyn_generalized_report(r, n, degree_bound));
}

}  // namespace qtk
