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

#include "qtk/counting.hpp"

#include <type_traits>

#include "qtk/factor.hpp"
#include "qtk/quad_transform.hpp"

namespace qtk {

namespace {

BigInt exact_div(const BigInt& num, std::uint64_t den) {
  BigInt q = num / den;
  if (q * den != num) throw Error(Errc::IdentityViolated, "non-integral count " + num.str() + "/" + std::to_string(den));
  return q;
}

BigInt odd_divisor_sum(std::uint64_t q, std::uint64_t n) {
  BigInt s = 0;
  for (std::uint64_t d : divisors(n)) {
    if (d % 2 == 0) continue;
    int mu = moebius_mu(d);
    if (mu != 0) s += mu * ipow(q, static_cast<unsigned>(n / d));
  }
  return s;
}

void require_n(std::uint64_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "n must be positive");
}

void require_sigma(const Field& f, Elem sigma) {
  if (!f.contains(sigma)) throw Error(Errc::InvalidArgument, "sigma outside the field");
  if (sigma == 0) throw Error(Errc::ZeroSigma, "sigma must be nonzero");
}

int epsilon_power(int eps, std::uint64_t n) {
  if (eps == 0) return 0;
  return (eps == -1 && n % 2 == 1) ? -1 : 1;
}

}  // namespace

int moebius_mu(std::uint64_t d) {
  if (d == 0) throw Error(Errc::InvalidArgument, "mu(0) is undefined");
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (d % p == 0) return 0;
    mu = -mu;
  }
  return d > 1 ? -mu : mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

bool is_power_of_two(std::uint64_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

bool is_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::map<std::uint64_t, BigInt> moebius_invert_odd(const std::map<std::uint64_t, BigInt>& f_values) {
  std::map<std::uint64_t, BigInt> g;
  for (const auto& [n, fn] : f_values) {
    BigInt acc = 0;
    for (std::uint64_t d : divisors(n)) {
      if (d % 2 == 0) continue;
      auto it = f_values.find(n / d);
      if (it == f_values.end()) {
        throw Error(Errc::MissingDivisorValue, "no value at " + std::to_string(n / d) + " (needed for " +
                                                   std::to_string(n) + ")");
      }
      acc += moebius_mu(d) * it->second;
    }
    g[n] = acc;
  }
  return g;
}

int epsilon_of(const Field& f, Elem sigma) {
  require_sigma(f, sigma);
  if (f.char2()) return 0;
  return f.is_square(sigma) ? 1 : -1;
}

CountResult count_carlitz(std::uint64_t q, std::uint64_t n) {
  require_n(n);
  if (!is_prime_power(q)) throw Error(Errc::InvalidArgument, std::to_string(q) + " is not a prime power");
  CountResult r;
  r.epsilon = q % 2 == 1 ? 1 : 0;
  if (q % 2 == 1 && is_power_of_two(n)) {
    r.value = exact_div(ipow(q, static_cast<unsigned>(n)) - 1, 2 * n);
    r.formula_branch = "odd-q-n-power-of-2";
  } else {
    r.value = exact_div(odd_divisor_sum(q, n), 2 * n);
    r.formula_branch = "odd-divisor-sum";
  }
  return r;
}

CountResult count_sigma(const Field& f, std::uint64_t n, Elem sigma) {
  require_n(n);
  CountResult r;
  r.epsilon = epsilon_of(f, sigma);
  if (f.odd() && is_power_of_two(n)) {
    r.value = exact_div(ipow(f.q(), static_cast<unsigned>(n)) - epsilon_power(r.epsilon, n), 2 * n);
    r.formula_branch = "odd-q-n-power-of-2";
  } else {
    r.value = exact_div(odd_divisor_sum(f.q(), n), 2 * n);
    r.formula_branch = "odd-divisor-sum";
  }
  return r;
}

CountResult count_ahmadi(std::uint64_t n, const QuadRationalExpr& r) {
  if (n < 2) throw Error(Errc::RequiresNGreaterThan1, "n must exceed 1");
  const Field& f = r.field();
  CountResult out;
  if (f.char2() && r.derivatives_vanish()) {
    out.value = 0;
    out.formula_branch = "even-q-derivatives-vanish";
    return out;
  }
  Reduction red = reduce_canonical(r);
  out.epsilon = epsilon_of(f, red.form.sigma);
  if (f.odd() && is_power_of_two(n)) {
    out.value = exact_div(ipow(f.q(), static_cast<unsigned>(n)) - 1, 2 * n);
    out.formula_branch = "odd-q-n-power-of-2";
  } else {
    out.value = exact_div(odd_divisor_sum(f.q(), n), 2 * n);
    out.formula_branch = "odd-divisor-sum";
  }
  return out;
}

CountResult count_linear_inputs(const QuadRationalExpr& r) {
  const Field& f = r.field();
  CountResult out;
  if (f.char2()) {
    if (r.derivatives_vanish()) throw Error(Errc::Char2Degenerate, "g' = h' = 0 in characteristic 2");
    out.value = f.q() / 2;
    out.formula_branch = "even-q";
    return out;
  }
  Polynomial w = r.wronskian();
  bool split = true;
  if (w.deg() == 2) {
    Elem disc = f.sub(f.mul(w.coeff(1), w.coeff(1)), f.mul(f.from_int(4), f.mul(w.coeff(2), w.coeff(0))));
    split = f.is_square(disc);
  }
  out.epsilon = split ? 1 : -1;
  out.value = split ? (f.q() - 1) / 2 : (f.q() + 1) / 2;
  out.formula_branch = split ? "odd-q-wronskian-splits" : "odd-q-wronskian-irreducible";
  return out;
}

CountResult count_corollary(const Field& f, std::uint64_t n, Elem sigma) {
  require_n(n);
  CountResult r;
  r.epsilon = epsilon_of(f, sigma);
  if (f.odd() && n > 1 && is_power_of_two(n)) {
    r.delta = 1;
    r.formula_branch = "odd-q-n-power-of-2";
  } else if (f.odd() && n == 1) {
    r.delta = r.epsilon;
    r.formula_branch = r.delta == 1 ? "odd-q-n1-square" : "odd-q-n1-nonsquare";
  } else {
    r.formula_branch = "otherwise";
  }
  r.value = exact_div(odd_divisor_sum(f.q(), n) - r.delta, 2 * n);
  return r;
}

CountResult count_formula(const CountQuery& query) {
  const Field& f = query.field;
  return std::visit(
      [&](const auto& v) -> CountResult {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, CarlitzSrim>) {
          return count_carlitz(f.q(), query.n);
        } else if constexpr (std::is_same_v<V, SigmaForm>) {
          return count_sigma(f, query.n, v.sigma);
        } else if constexpr (std::is_same_v<V, GeneralQuadratic>) {
          return count_ahmadi(query.n, v.r);
        } else {
          return count_linear_inputs(v.r);
        }
      },
      query.variant);
}

namespace {

bool irreducible_quadratic(const Polynomial& p) { return p.degree() == Degree(2) && is_irreducible(p); }

}  // namespace

std::uint64_t brute_count(const CountQuery& query) {
  const Field& f = query.field;
  require_n(query.n);
  return std::visit(
      [&](const auto& v) -> std::uint64_t {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, CarlitzSrim>) {
          return count_irreducible_images(QuadRationalExpr::sigma_form(f, 1), query.n);
        } else if constexpr (std::is_same_v<V, SigmaForm>) {
          require_sigma(f, v.sigma);
          return count_irreducible_images(QuadRationalExpr::sigma_form(f, v.sigma), query.n);
        } else if constexpr (std::is_same_v<V, GeneralQuadratic>) {
          if (!(v.r.field() == f)) throw Error(Errc::FieldMismatch, "expression over another field");
          return count_irreducible_images(v.r, query.n);
        } else {
          if (!(v.r.field() == f)) throw Error(Errc::FieldMismatch, "expression over another field");
          std::uint64_t count = irreducible_quadratic(v.r.h()) ? 1 : 0;
          for (std::uint32_t i = 0; i < f.q(); ++i) {
            Elem alpha = f.unrank(i);
            if (irreducible_quadratic(v.r.g() - v.r.h().scale(alpha))) ++count;
          }
          return count;
        }
      },
      query.variant);
}

std::uint64_t brute_count_invariant(const Field& f, std::uint64_t n, Elem sigma) {
  require_n(n);
  require_sigma(f, sigma);
  std::uint64_t count = 0;
  for_each_monic(f, 2 * n, [&](const Polynomial& F) {
    if (is_sigma_self_reciprocal(F, sigma) && is_irreducible(F)) ++count;
  });
  return count;
}

}  // namespace qtk
