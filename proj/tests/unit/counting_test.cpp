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

#include <cmath>

#include "qtk/factor.hpp"
#include "qtk/random.hpp"
#include "test_util.hpp"

namespace qtk {
namespace {

using testing::P;

// Monic irreducible F of degree 2n with b_(n-k) = sigma^k b_(n+k), by direct
// enumeration of coefficient vectors.
std::uint64_t count_invariant_directly(const Field& f, std::size_t n, Elem sigma) {
  std::uint64_t count = 0;
  for_each_monic(f, 2 * n, [&](const Polynomial& F) {
    Elem sk = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      sk = f.mul(sk, sigma);
      if (F.coeff(n - k) != f.mul(sk, F.coeff(n + k))) return;
    }
    if (is_irreducible(F)) ++count;
  });
  return count;
}

TEST(Mu, Values) {
  EXPECT_EQ(moebius_mu(1), 1);
  EXPECT_EQ(moebius_mu(6), 1);
  EXPECT_EQ(moebius_mu(12), 0);
  EXPECT_EQ(moebius_mu(7), -1);
  EXPECT_EQ(moebius_mu(30), -1);
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(MoebiusInvertOdd, Examples) {
  std::map<std::uint64_t, BigInt> f{{1, 1}, {2, 1}, {3, 2}, {6, 2}};
  auto g = moebius_invert_odd(f);
  for (auto n : {1, 2, 3, 6}) EXPECT_EQ(g[n], 1) << n;
  EXPECT_EQ(moebius_invert_odd({{1, 5}})[1], 5);
  EXPECT_ERRC(moebius_invert_odd({{1, 1}, {6, 2}}), Errc::MissingDivisorValue);
}

TEST(MoebiusInvertOdd, DegreeIdentityInvertsToCounts) {
  for (auto q : {3u, 5u, 4u}) {
    Field f = q == 4 ? Field::make(2, 2) : Field::make(q);
    for (Elem sigma : {Elem{1}, f.odd() ? f.least_nonsquare() : Elem{2}}) {
      const int eps = epsilon_of(f, sigma);
      std::map<std::uint64_t, BigInt> fv;
      for (std::uint64_t n = 1; n <= 12; ++n) {
        BigInt en = eps == 0 ? 0 : (eps == -1 && n % 2 == 1 ? -1 : 1);
        fv[n] = ipow(q, static_cast<unsigned>(n)) - en;
      }
      auto g = moebius_invert_odd(fv);
      for (std::uint64_t n = 1; n <= 12; ++n) EXPECT_EQ(g[n], 2 * n * count_sigma(f, n, sigma).value) << q << " " << n;
    }
  }
}

TEST(Carlitz, Examples) {
  EXPECT_EQ(count_carlitz(2, 1).value, 1);
  EXPECT_EQ(count_carlitz(3, 2).value, 2);
  EXPECT_EQ(count_carlitz(2, 3).value, 1);
  EXPECT_EQ(count_carlitz(3, 2).formula_branch, "odd-q-n-power-of-2");
  EXPECT_EQ(count_carlitz(2, 3).epsilon, 0);
  EXPECT_ERRC(count_carlitz(6, 2), Errc::InvalidArgument);
  Field f2 = Field::make(2), f3 = Field::make(3);
  EXPECT_EQ(count_invariant_directly(f2, 1, 1), 1u);
  EXPECT_EQ(count_invariant_directly(f3, 2, 1), 2u);
  EXPECT_EQ(count_invariant_directly(f2, 3, 1), 1u);
}

TEST(Sigma, Examples) {
  Field f3 = Field::make(3), f2 = Field::make(2);
  auto a = count_sigma(f3, 1, 2);
  EXPECT_EQ(a.value, 2);
  EXPECT_EQ(a.epsilon, -1);
  EXPECT_EQ(count_sigma(f3, 1, 1).value, 1);
  EXPECT_EQ(count_sigma(f3, 1, 1).epsilon, 1);
  auto c = count_sigma(f2, 2, 1);
  EXPECT_EQ(c.value, 1);
  EXPECT_EQ(c.epsilon, 0);
  EXPECT_ERRC(count_sigma(f3, 1, 0), Errc::ZeroSigma);
  EXPECT_EQ(count_invariant_directly(f3, 1, 2), 2u);
  EXPECT_EQ(count_invariant_directly(f3, 1, 1), 1u);
  EXPECT_EQ(count_invariant_directly(f2, 2, 1), 1u);
}

TEST(Sigma, MatchesDirectEnumeration) {
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u}}) {
    Field f = Field::make(p, k);
    for (std::size_t n = 1; n <= 4; ++n) {
      if (std::pow(f.q(), 2 * n) > 200000) break;
      for (Elem sigma = 1; sigma < f.q(); ++sigma) {
        const auto expect = count_invariant_directly(f, n, sigma);
        EXPECT_EQ(count_sigma(f, n, sigma).value, expect) << f.name() << " n=" << n << " s=" << sigma;
        EXPECT_EQ(brute_count({f, n, SigmaForm{sigma}}), expect);
        EXPECT_EQ(brute_count_invariant(f, n, sigma), expect);
      }
    }
  }
}

TEST(Ahmadi, Examples) {
  Field f2 = Field::make(2), f3 = Field::make(3);
  QuadRationalExpr degenerate(P(f2, {1, 0, 1}), P(f2, {0, 0, 1}));
  for (std::uint64_t n : {2, 3, 4}) {
    EXPECT_EQ(count_ahmadi(n, degenerate).value, 0);
    EXPECT_EQ(brute_count({f2, n, GeneralQuadratic{degenerate}}), 0u);
  }
  Sampler s(3);
  for (int t = 0; t < 5; ++t) {
    QuadRationalExpr r = s.quad_expr(f3);
    EXPECT_EQ(count_ahmadi(2, r).value, 2);
    EXPECT_EQ(brute_count({f3, 2, GeneralQuadratic{r}}), 2u);
  }
  EXPECT_EQ(count_ahmadi(3, QuadRationalExpr::sigma_form(f2, 1)).value, 1);
  EXPECT_EQ(brute_count({f2, 3, GeneralQuadratic{QuadRationalExpr::sigma_form(f2, 1)}}), 1u);
  EXPECT_ERRC(count_ahmadi(1, QuadRationalExpr::sigma_form(f2, 1)), Errc::RequiresNGreaterThan1);
}

TEST(LinearInputs, Examples) {
  Field f3 = Field::make(3), f4 = Field::make(2, 2), f2 = Field::make(2);
  QuadRationalExpr r1 = QuadRationalExpr::sigma_form(f3, 1), r2 = QuadRationalExpr::sigma_form(f3, 2);
  EXPECT_EQ(count_linear_inputs(r1).value, 1);
  EXPECT_EQ(count_linear_inputs(r2).value, 2);
  EXPECT_EQ(brute_count({f3, 1, LinearInput{r1}}), 1u);
  EXPECT_EQ(brute_count({f3, 1, LinearInput{r2}}), 2u);
  Sampler s(4);
  for (int t = 0; t < 10; ++t) {
    QuadRationalExpr r = s.quad_expr(f4);
    if (r.derivatives_vanish()) continue;
    EXPECT_EQ(count_linear_inputs(r).value, 2);
    EXPECT_EQ(brute_count({f4, 1, LinearInput{r}}), 2u);
  }
  EXPECT_ERRC(count_linear_inputs(QuadRationalExpr(P(f2, {1, 0, 1}), P(f2, {0, 0, 1}))), Errc::Char2Degenerate);
}

TEST(LinearInputs, PencilIncludesH) {
  // h = x^2 + x + 1 is the only irreducible member of the pencil of
  // x and x^2 + x + 1 over GF(2); it is not of the form g - alpha h.
  Field f2 = Field::make(2);
  QuadRationalExpr r(P(f2, {0, 1}), P(f2, {1, 1, 1}));
  EXPECT_EQ(count_linear_inputs(r).value, 1);
  EXPECT_EQ(brute_count({f2, 1, LinearInput{r}}), 1u);
  std::uint64_t affine_only = 0;
  for (Elem alpha = 0; alpha < 2; ++alpha) {
    Polynomial m = r.g() - r.h().scale(alpha);
    if (m.degree() == Degree(2) && is_irreducible(m)) ++affine_only;
  }
  EXPECT_EQ(affine_only, 0u);
}

TEST(Corollary, Examples) {
  Field f3 = Field::make(3), f2 = Field::make(2);
  auto a = count_corollary(f3, 1, 1);
  EXPECT_EQ(a.delta, 1);
  EXPECT_EQ(a.value, 1);
  auto b = count_corollary(f3, 1, 2);
  EXPECT_EQ(b.delta, -1);
  EXPECT_EQ(b.value, 2);
  auto c = count_corollary(f2, 2, 1);
  EXPECT_EQ(c.delta, 0);
  EXPECT_EQ(c.value, 1);
  EXPECT_ERRC(count_corollary(f3, 1, 0), Errc::ZeroSigma);
}

TEST(Corollary, AgreesWithSigmaCount) {
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}, std::pair{7u, 1u},
                      std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    Field f = Field::make(p, k);
    for (std::uint64_t n = 1; n <= 8; ++n)
      for (Elem sigma = 1; sigma < f.q(); ++sigma)
        EXPECT_EQ(count_corollary(f, n, sigma).value, count_sigma(f, n, sigma).value);
  }
}

TEST(DegreeIdentity, SumOverOddDivisors) {
  for (auto [p, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u}, std::pair{3u, 2u}}) {
    Field f = Field::make(p, k);
    for (Elem sigma = 1; sigma < f.q(); ++sigma) {
      const int eps = epsilon_of(f, sigma);
      for (std::uint64_t n = 1; n <= 10; ++n) {
        BigInt sum = 0;
        for (auto d : divisors(n))
          if (d % 2 == 1) sum += (2 * n / d) * count_sigma(f, n / d, sigma).value;
        BigInt en = eps == 0 ? 0 : (eps == -1 && n % 2 == 1 ? -1 : 1);
        EXPECT_EQ(sum, ipow(f.q(), static_cast<unsigned>(n)) - en);
      }
    }
  }
}

TEST(Formula, DispatchAndBigValues) {
  Field f7 = Field::make(7);
  EXPECT_EQ(count_formula({f7, 2, CarlitzSrim{}}).value, count_carlitz(7, 2).value);
  EXPECT_EQ(count_formula({f7, 1, LinearInput{QuadRationalExpr::sigma_form(f7, 3)}}).value, 4);
  // (3^64 - 1)/128 is far beyond 64 bits.
  EXPECT_EQ(count_carlitz(3, 64).value, (ipow(3, 64) - 1) / 128);
}

}  // namespace
}  // namespace qtk
