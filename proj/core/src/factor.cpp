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

#include "qtk/factor.hpp"

#include <algorithm>
#include <random>

namespace qtk {

namespace {

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

void check_enumeration_size(const Field& f, std::size_t d) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count *= f.q();
    if (count > kEnumerationLimit)
      throw Error(Errc::SizeBoundExceeded, "enumeration of q^d monic polynomials exceeds 2^22");
  }
}

Polynomial x_minus(const Polynomial& h) { return h - Polynomial::x(h.field()); }

// p-th root of a polynomial whose derivative vanishes.
Polynomial pth_root(const Polynomial& f) {
  const Field& fl = f.field();
  const std::uint32_t p = fl.p();
  std::uint64_t root_exp = 1;  // inverse Frobenius: a -> a^(q/p)
  for (std::uint32_t i = 1; i < fl.k(); ++i) root_exp *= p;
  std::vector<Elem> out(f.deg() / p + 1, 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fl.pow(f.coeff(i * p), root_exp);
  return {fl, std::move(out)};
}

void squarefree_decompose(const Polynomial& f, std::size_t multiplier,
                          std::vector<std::pair<Polynomial, std::size_t>>& out) {
  if (f.deg() == 0) return;
  const Polynomial fd = derivative(f);
  if (fd.is_zero()) {
    squarefree_decompose(pth_root(f), multiplier * f.field().p(), out);
    return;
  }
  Polynomial c = gcd(f, fd);
  Polynomial w = f / c;
  std::size_t i = 1;
  while (w.deg() > 0) {
    const Polynomial y = gcd(w, c);
    const Polynomial fac = w / y;
    if (fac.deg() > 0) out.emplace_back(fac.monic(), i * multiplier);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.deg() > 0) squarefree_decompose(pth_root(c), multiplier * f.field().p(), out);
}

// Returns (product of all irreducible factors of degree d, d) pairs.
std::vector<std::pair<Polynomial, std::size_t>> distinct_degree(Polynomial f, std::size_t bound) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  const BigInt q = f.field().q();
  Polynomial h = Polynomial::x(f.field()) % f;
  for (std::size_t d = 1; f.deg() > 0; ++d) {
    if (f.deg() < 2 * d) {
      out.emplace_back(f, f.deg());
      break;
    }
    if (d > bound) throw Error(Errc::BoundTooSmall, "irreducible factor of degree > " + std::to_string(bound));
    h = pow_mod(h, q, f);
    const Polynomial g = gcd(x_minus(h), f);
    if (g.deg() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  for (const auto& [g, d] : out)
    if (d > bound) throw Error(Errc::BoundTooSmall, "irreducible factor of degree > " + std::to_string(bound));
  return out;
}

Polynomial random_below(const Field& f, std::size_t degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> dist(0, f.q() - 1);
  std::vector<Elem> c(degree);
  for (auto& e : c) e = dist(rng);
  return {f, std::move(c)};
}

void equal_degree(const Polynomial& g, std::size_t d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  const std::size_t n = g.deg();
  if (n == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& f = g.field();
  BigInt qd = 1;
  for (std::size_t i = 0; i < d; ++i) qd *= f.q();
  const BigInt half = (qd - 1) / 2;
  const std::size_t trace_steps = static_cast<std::size_t>(f.k()) * d;
  for (;;) {
    const Polynomial a = random_below(f, n, rng);
    if (a.is_constant()) continue;
    Polynomial b(f);
    if (f.odd()) {
      b = pow_mod(a, half, g) - Polynomial::constant(f, 1);
    } else {
      Polynomial t = a;
      b = a;
      for (std::size_t i = 1; i < trace_steps; ++i) {
        t = mul_mod(t, t, g);
        b = b + t;
      }
    }
    if (b.is_zero()) continue;
    const Polynomial u = gcd(b, g);
    if (u.deg() == 0 || u.deg() == n) continue;
    equal_degree(u, d, rng, out);
    equal_degree(g / u, d, rng, out);
    return;
  }
}

void sort_factors(std::vector<std::pair<Polynomial, std::size_t>>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
}

}  // namespace

bool poly_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto ra = f.rank(a.coeffs()[i]), rb = f.rank(b.coeffs()[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

bool is_irreducible(const Polynomial& p) {
  if (p.is_zero() || p.deg() < 1) throw Error(Errc::DegreeZero, "irreducibility needs degree >= 1");
  const std::size_t n = p.deg();
  if (n == 1) return true;
  const Polynomial m = p.monic();
  const BigInt q = p.field().q();
  const auto primes = prime_divisors(n);
  std::vector<std::size_t> checkpoints;
  for (auto r : primes) checkpoints.push_back(n / r);
  Polynomial h = Polynomial::x(p.field());
  for (std::size_t i = 1; i <= n; ++i) {
    h = pow_mod(h, q, m);
    if (i < n && std::find(checkpoints.begin(), checkpoints.end(), i) != checkpoints.end()) {
      const Polynomial diff = x_minus(h);
      if (diff.is_zero() || gcd(diff, m).deg() != 0) return false;
    }
  }
  return x_minus(h).is_zero();
}

void for_each_monic(const Field& f, std::size_t d, const std::function<void(const Polynomial&)>& visit) {
  check_enumeration_size(f, d);
  std::vector<std::uint32_t> ranks(d, 0);
  std::vector<Elem> coeffs(d + 1, 0);
  coeffs[d] = 1;
  for (;;) {
    visit(Polynomial(f, coeffs));
    // Increment with the constant term as the most significant digit.
    std::size_t pos = d;
    while (pos > 0) {
      --pos;
      if (++ranks[pos] < f.q()) {
        coeffs[pos] = f.unrank(ranks[pos]);
        break;
      }
      ranks[pos] = 0;
      coeffs[pos] = f.unrank(0);
      if (pos == 0) return;
    }
    if (d == 0) return;
  }
}

void for_each_monic_irreducible(const Field& f, std::size_t d,
                                const std::function<void(const Polynomial&)>& visit) {
  if (d == 0) throw Error(Errc::DegreeZero, "irreducible polynomials have degree >= 1");
  for_each_monic(f, d, [&](const Polynomial& p) {
    if (is_irreducible(p)) visit(p);
  });
}

std::vector<Polynomial> enumerate_monic_irreducible(const Field& f, std::size_t d) {
  std::vector<Polynomial> out;
  for_each_monic_irreducible(f, d, [&](const Polynomial& p) { out.push_back(p); });
  return out;
}

BigInt gauss_count(std::uint64_t q, std::uint64_t d) {
  BigInt sum = 0;
  for (std::uint64_t e = 1; e <= d; ++e)
    if (d % e == 0) sum += mobius(e) * ipow(q, static_cast<unsigned>(d / e));
  return sum / d;
}

Polynomial Factorization::expand(const Field& f) const {
  Polynomial out = Polynomial::constant(f, unit);
  for (const auto& [g, m] : factors) out = out * pow(g, m);
  return out;
}

bool Factorization::squarefree() const noexcept {
  return std::all_of(factors.begin(), factors.end(), [](const auto& fm) { return fm.second == 1; });
}

Factorization factorize(const Polynomial& p, std::size_t bound) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor zero");
  Factorization out;
  out.unit = p.lead();
  if (p.deg() == 0) return out;
  std::vector<std::pair<Polynomial, std::size_t>> sqf;
  squarefree_decompose(p.monic(), 1, sqf);
  std::mt19937_64 rng(0x71746bULL + p.deg());
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(part, bound)) {
      std::vector<Polynomial> pieces;
      equal_degree(block, d, rng, pieces);
      for (auto& piece : pieces) out.factors.emplace_back(std::move(piece), mult);
    }
  }
  sort_factors(out.factors);
  return out;
}

Factorization factorize_trial(const Polynomial& p, std::size_t bound) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "cannot factor zero");
  Factorization out;
  out.unit = p.lead();
  Polynomial rest = p.monic();
  for (std::size_t d = 1; rest.deg() > 0; ++d) {
    if (rest.deg() < 2 * d) {
      if (rest.deg() > bound)
        throw Error(Errc::BoundTooSmall, "residual cofactor of degree " + std::to_string(rest.deg()));
      out.factors.emplace_back(rest, 1);
      break;
    }
    if (d > bound)
      throw Error(Errc::BoundTooSmall, "residual cofactor of degree " + std::to_string(rest.deg()));
    for_each_monic_irreducible(p.field(), d, [&](const Polynomial& g) {
      std::size_t mult = 0;
      for (;;) {
        auto [quot, rem] = divrem(rest, g);
        if (!rem.is_zero()) break;
        rest = std::move(quot);
        ++mult;
      }
      if (mult) out.factors.emplace_back(g, mult);
    });
  }
  sort_factors(out.factors);
  return out;
}

}  // namespace qtk
