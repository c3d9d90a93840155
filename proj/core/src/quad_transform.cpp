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

#include "qtk/quad_transform.hpp"

#include <map>
#include <numeric>

#include "qtk/factor.hpp"
#include "qtk/linalg.hpp"

namespace qtk {

namespace {

std::vector<Polynomial> powers(const Polynomial& p, std::size_t n) {
  std::vector<Polynomial> out;
  out.reserve(n + 1);
  out.push_back(Polynomial::constant(p.field(), 1));
  for (std::size_t i = 1; i <= n; ++i) out.push_back(out.back() * p);
  return out;
}

std::size_t half_degree(const Polynomial& F) {
  if (F.is_zero()) throw Error(Errc::ZeroPolynomial, "zero polynomial");
  if (F.deg() % 2 != 0) throw Error(Errc::OddDegree, "degree " + std::to_string(F.deg()) + " is odd");
  return F.deg() / 2;
}

void require_nonzero_sigma(const Field& f, Elem sigma) {
  if (!f.contains(sigma)) throw Error(Errc::InvalidArgument, "sigma outside the field");
  if (sigma == 0) throw Error(Errc::ZeroSigma, "sigma must be nonzero");
}

void check_triple(const Field& f, const Triple& t) {
  if (triple_determinant(f, t) == 0) throw Error(Errc::SingularTriple, "b^2 - ac = 0");
  if (f.char2() && t.a == 0 && t.c == 0) throw Error(Errc::Char2Degenerate, "a = c = 0 in characteristic 2");
}

}  // namespace

Elem triple_determinant(const Field& f, const Triple& t) { return f.sub(f.mul(t.b, t.b), f.mul(t.a, t.c)); }

Polynomial fixed_point_polynomial(const Field& f, const Triple& t) {
  return Polynomial(f, {t.c, f.neg(f.add(t.b, t.b)), t.a});
}

Polynomial substitute_rational(const Polynomial& p, const Polynomial& num, const Polynomial& den) {
  require_same_field(p, num);
  require_same_field(p, den);
  const Field& f = p.field();
  if (p.is_zero()) return Polynomial(f);
  const std::size_t n = p.deg();
  auto np = powers(num, n);
  auto dp = powers(den, n);
  Polynomial out(f);
  for (std::size_t i = 0; i <= n; ++i) {
    if (p.coeff(i) != 0) out += (np[i] * dp[n - i]).scale(p.coeff(i));
  }
  return out;
}

Polynomial substitute_fractional_linear(const Polynomial& F, Elem a, Elem b, Elem c, Elem d, std::size_t N) {
  const Field& f = F.field();
  if (F.is_zero()) return Polynomial(f);
  if (F.deg() > N) throw Error(Errc::InvalidArgument, "homogenizing degree below deg F");
  auto np = powers(Polynomial(f, {b, a}), N);
  auto dp = powers(Polynomial(f, {d, c}), N);
  Polynomial out(f);
  for (std::size_t i = 0; i <= F.deg(); ++i) {
    if (F.coeff(i) != 0) out += (np[i] * dp[N - i]).scale(F.coeff(i));
  }
  return out;
}

Polynomial reciprocal(const Polynomial& F) {
  if (F.is_zero()) return F;
  std::vector<Elem> c(F.coeffs().rbegin(), F.coeffs().rend());
  return {F.field(), std::move(c)};
}

TransformResult transform(const Polynomial& f, const QuadRationalExpr& r, bool normalize_monic) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot transform the zero polynomial");
  require_same_field(f, r.g());
  Polynomial out = substitute_rational(f, r.g(), r.h());
  TransformResult res{out, out.degree() < Degree(2 * f.deg()), false};
  if (normalize_monic && !out.is_zero()) {
    res.result = out.monic();
    res.normalized_monic = true;
  }
  return res;
}

bool is_sigma_self_reciprocal(const Polynomial& F, Elem sigma) {
  const Field& f = F.field();
  require_nonzero_sigma(f, sigma);
  const std::size_t n = half_degree(F);
  Elem sk = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    sk = f.mul(sk, sigma);
    if (F.coeff(n - k) != f.mul(F.coeff(n + k), sk)) return false;
  }
  return true;
}

bool is_invariant_generalized(const Polynomial& F, const Triple& t) {
  const Field& f = F.field();
  const std::size_t n = half_degree(F);
  check_triple(f, t);
  Polynomial lhs = substitute_fractional_linear(F, t.b, f.neg(t.c), t.a, f.neg(t.b), 2 * n);
  return lhs == F.scale(f.pow(triple_determinant(f, t), n));
}

bool roots_orbit_check(const Polynomial& F, const Triple& t) {
  const Field& f = F.field();
  half_degree(F);
  check_triple(f, t);
  if (!gcd(F, fixed_point_polynomial(f, t)).is_constant()) {
    throw Error(Errc::NotCoprime, "F shares a factor with ax^2 - 2bx + c");
  }
  Factorization fac = factorize(F, F.deg());
  std::uint64_t m = 1;
  for (const auto& [p, e] : fac.factors) m = std::lcm(m, static_cast<std::uint64_t>(p.deg()));
  BigInt order = boost::multiprecision::pow(BigInt(f.q()), static_cast<unsigned>(m));
  if (m * f.k() > 64 || order > BigInt(Field::kMaxOrder)) {
    throw Error(Errc::SizeBoundExceeded, "splitting field GF(" + std::to_string(f.q()) + "^" + std::to_string(m) +
                                             ") exceeds 2^20 elements");
  }
  Field big = Field::make(f.p(), f.k() * static_cast<std::uint32_t>(m));
  Embedding emb(f, big);
  std::map<Elem, std::size_t> roots;
  for (const auto& [p, e] : fac.factors) {
    Factorization lin = factorize(map_coefficients(p, emb), 1);
    for (const auto& [l, e2] : lin.factors) roots[big.neg(l.coeff(0))] += e * e2;
  }
  const Elem a = emb(t.a), b = emb(t.b), c = emb(t.c);
  for (const auto& [xi, mult] : roots) {
    Elem den = big.sub(big.mul(a, xi), b);
    if (den == 0) return false;
    Elem img = big.div(big.sub(big.mul(b, xi), c), den);
    auto it = roots.find(img);
    if (it == roots.end() || it->second != mult) return false;
  }
  return true;
}

BigInt dickson_weight(unsigned n, unsigned i) {
  if (n == 0) return i == 0 ? BigInt(2) : BigInt(0);
  if (2 * i > n) return 0;
  BigInt binom = 1;
  for (unsigned j = 0; j < i; ++j) binom = binom * (n - i - j) / (j + 1);
  BigInt num = binom * n;
  BigInt q = num / (n - i);
  if (q * (n - i) != num) throw Error(Errc::IdentityViolated, "Dickson weight not integral");
  return q;
}

Polynomial dickson(const Field& f, const DicksonParams& params) {
  if (!f.contains(params.a)) throw Error(Errc::InvalidArgument, "parameter outside the field");
  const unsigned n = params.n;
  std::vector<Elem> c(n + 1, 0);
  const Elem neg_a = f.neg(params.a);
  Elem na_pow = 1;
  for (unsigned i = 0; 2 * i <= n; ++i) {
    BigInt w = dickson_weight(n, i) % f.p();
    c[n - 2 * i] = f.mul(f.from_int(static_cast<long long>(w)), na_pow);
    na_pow = f.mul(na_pow, neg_a);
  }
  return {f, std::move(c)};
}

namespace {

void require_invariant(const Polynomial& F, Elem sigma) {
  if (!is_sigma_self_reciprocal(F, sigma)) throw Error(Errc::NotInvariant, "F is not sigma-self-reciprocal");
}

Polynomial verified(Polynomial f, const Polynomial& F, Elem sigma) {
  auto t = transform(f, QuadRationalExpr::sigma_form(F.field(), sigma));
  if (t.result != F) throw Error(Errc::IdentityViolated, "reconstruction does not transform back to F");
  return f;
}

}  // namespace

Polynomial reconstruct_closed_form(const Polynomial& F, Elem sigma) {
  const Field& f = F.field();
  if (f.char2()) throw Error(Errc::Char2ClosedFormUnavailable, "closed form needs odd characteristic");
  require_invariant(F, sigma);
  const std::size_t n = F.deg() / 2;
  auto b = [&](std::size_t k) { return k == n ? f.div(F.coeff(n), f.from_int(2)) : F.coeff(k); };
  const Elem neg_sigma = f.neg(sigma);
  std::vector<Elem> out(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    Elem acc = 0;
    Elem ns_pow = 1;
    for (std::size_t i = 0; 2 * i + j <= n; ++i) {
      BigInt w = dickson_weight(static_cast<unsigned>(2 * i + j), static_cast<unsigned>(i)) % f.p();
      Elem term = f.mul(f.mul(f.from_int(static_cast<long long>(w)), ns_pow), b(n + 2 * i + j));
      acc = f.add(acc, term);
      ns_pow = f.mul(ns_pow, neg_sigma);
    }
    out[j] = acc;
  }
  return verified(Polynomial(f, std::move(out)), F, sigma);
}

Polynomial reconstruct_linear(const Polynomial& F, Elem sigma) {
  const Field& f = F.field();
  require_invariant(F, sigma);
  const std::size_t n = F.deg() / 2;
  // x^(n-i) (x^2 + sigma)^i = x^n (x + sigma/x)^i
  Polynomial quad(f, {sigma, 0, 1});
  std::vector<Polynomial> basis;
  Polynomial qp = Polynomial::constant(f, 1);
  for (std::size_t i = 0; i <= n; ++i) {
    basis.push_back(qp * Polynomial::monomial(f, 1, n - i));
    qp *= quad;
  }
  auto sol = solve_in_span(basis, F);
  if (!sol) throw Error(Errc::NoSolution, "F is not of the form x^n f(x + sigma/x)");
  return verified(Polynomial(f, std::move(*sol)), F, sigma);
}

Polynomial reconstruct(const Polynomial& F, Elem sigma) {
  return F.field().char2() ? reconstruct_linear(F, sigma) : reconstruct_closed_form(F, sigma);
}

std::uint64_t count_irreducible_images(const QuadRationalExpr& r, std::size_t n) {
  std::uint64_t count = 0;
  for_each_monic_irreducible(r.field(), n, [&](const Polynomial& f) {
    auto t = transform(f, r);
    if (!t.degree_dropped && is_irreducible(t.result)) ++count;
  });
  return count;
}

bool count_preserving_bijections_check(const QuadRationalExpr& r, const QuadRationalExpr& r2, const MoebiusMap& m,
                                       Side side, std::size_t n) {
  if (n < 2) throw Error(Errc::RequiresNGreaterThan1, "n must exceed 1");
  QuadRationalExpr expect = side == Side::Pre ? apply_pre(r, m) : apply_post(r, m);
  if (!(expect == r2)) throw Error(Errc::InvalidArgument, "r2 is not the image of r under m");
  return count_irreducible_images(r, n) == count_irreducible_images(r2, n);
}

}  // namespace qtk
