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

#include "qtk/polynomial.hpp"

#include <sstream>

#include "qtk/random.hpp"
#include "test_util.hpp"

namespace qtk {
namespace {

using testing::Hum;
using testing::P;

TEST(Polynomial, TrimsAndDegree) {
  Field f = Field::make(5);
  EXPECT_TRUE(P(f, {0, 0}).is_zero());
  EXPECT_TRUE(P(f, {}).degree().is_neg_inf());
  EXPECT_ERRC(P(f, {}).deg(), Errc::ZeroPolynomial);
  EXPECT_EQ(P(f, {1, 2, 5}).deg(), 1u);
  EXPECT_LT(P(f, {}).degree(), Degree(0));
  EXPECT_EQ(P(f, {-1}).coeff(0), 4u);
}

TEST(Polynomial, Arithmetic) {
  Field f2 = Field::make(2), f3 = Field::make(3), f5 = Field::make(5);
  EXPECT_EQ(pow(P(f2, {1, 1}), 2), P(f2, {1, 0, 1}));
  auto [quo, rem] = divrem(P(f3, {-1, 0, 0, 0, 1}), P(f3, {-1, 0, 1}));
  EXPECT_EQ(quo, P(f3, {1, 0, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(P(f5, {2, 1}) * P(f5, {3, 1}), P(f5, {1, 0, 1}));
  EXPECT_ERRC(divrem(P(f5, {1}), P(f5, {})), Errc::DivisionByZero);
  EXPECT_ERRC(P(f5, {1}) + P(f3, {1}), Errc::FieldMismatch);
}

TEST(Polynomial, Gcd) {
  Field f2 = Field::make(2), f3 = Field::make(3);
  EXPECT_EQ(gcd(P(f3, {-1, 0, 1}), P(f3, {-1, 0, 1})), P(f3, {2, 0, 1}));
  EXPECT_EQ(gcd(P(f2, {1, 0, 0, 1}), P(f2, {1, 0, 1})), P(f2, {1, 1}));
  EXPECT_EQ(gcd(P(f3, {}), P(f3, {1, 2, 2})), P(f3, {2, 1, 1}));
  EXPECT_ERRC(gcd(P(f3, {}), P(f3, {})), Errc::BothZero);
}

TEST(Polynomial, Derivative) {
  Field f2 = Field::make(2), f3 = Field::make(3), f5 = Field::make(5);
  EXPECT_EQ(derivative(P(f2, {1, 1, 1})), P(f2, {1}));
  EXPECT_EQ(derivative(P(f3, {0, 1, 0, 1})), P(f3, {1}));
  EXPECT_EQ(derivative(P(f5, {4, 3, 1})), P(f5, {3, 2}));
}

TEST(Polynomial, Eval) {
  Field f3 = Field::make(3), f9 = Field::make(3, 2);
  EXPECT_EQ(eval(P(f3, {1, 0, 1}), 1), 2u);
  EXPECT_EQ(eval(P(f3, {}), 2), 0u);
  // With modulus x^2 + 1 the generator t satisfies t^2 = -1, so t^2 + 1 = 0.
  FieldElement t(f9, 3);
  EXPECT_TRUE(eval(P(f3, {1, 0, 1}), t).is_zero());
  EXPECT_EQ(eval(P(f3, {1, 1}), t), FieldElement(f9, 1 + 3));
  EXPECT_ERRC(eval(P(f3, {1, 1}), FieldElement(Field::make(5), 1)), Errc::FieldMismatch);
}

TEST(Polynomial, PowMod) {
  Field f3 = Field::make(3);
  Polynomial x = Polynomial::x(f3);
  EXPECT_EQ(pow_mod(x, 4, P(f3, {1, 0, 1})), P(f3, {1}));
  EXPECT_EQ(pow_mod(x, 1, P(f3, {1, 1, 1})), x);
  EXPECT_EQ(pow_mod(P(f3, {2, 1}), 0, P(f3, {1, 1, 1})), P(f3, {1}));
  EXPECT_ERRC(pow_mod(x, 3, P(f3, {})), Errc::ZeroModulus);
  // 3^40 + 1 overflows 64 bits.
  BigInt e = ipow(3, 40) + 1;
  Polynomial m = P(f3, {2, 1, 0, 1});
  Polynomial by_frob = mul_mod(x_pow_q_power_mod(40, m), x, m);
  EXPECT_EQ(pow_mod(x, e, m), by_frob);
}

TEST(Polynomial, ComposeAndFormat) {
  Field f5 = Field::make(5);
  EXPECT_EQ(compose(P(f5, {0, 0, 1}), P(f5, {1, 1})), P(f5, {1, 2, 1}));
  std::ostringstream os;
  os << P(f5, {1, 0, 3});
  EXPECT_EQ(os.str(), "3*x^2+1 {1,0,3} over GF(5)");
  EXPECT_EQ(format_poly(P(f5, {1, 0, 3})), "1,0,3");
  EXPECT_EQ(format_poly(P(f5, {})), "0");
}

TEST(Polynomial, TextRoundTrip) {
  Field f9 = Field::make(3, 2);
  Polynomial p = parse_poly(f9, "[1 2],0,[0 1]");
  EXPECT_EQ(p.coeff(0), 1u + 2 * 3);
  EXPECT_EQ(p.coeff(2), 3u);
  EXPECT_EQ(parse_poly(f9, format_poly(p)), p);
  EXPECT_EQ(parse_poly(f9, format_human(p)), p);
  Field f7 = Field::make(7);
  EXPECT_EQ(Hum(f7, "x^2 + 2*x + 1"), P(f7, {1, 2, 1}));
  EXPECT_EQ(Hum(f7, "-x^3 - 3x + 1"), P(f7, {1, -3, 0, -1}));
  EXPECT_EQ(parse_poly(f7, "y^2-2"), P(f7, {-2, 0, 1}));
  EXPECT_ERRC(parse_poly(f7, "1,,2"), Errc::ParseError);
  auto [g, h] = parse_fraction(f7, "1,0,1 / 0,1");
  EXPECT_EQ(g, P(f7, {1, 0, 1}));
  EXPECT_EQ(h, P(f7, {0, 1}));
}

TEST(Polynomial, DivremRoundTripRandomized) {
  Sampler s(11);
  for (auto f : {Field::make(2), Field::make(3, 2), Field::make(7), Field::make(2, 3)}) {
    for (int t = 0; t < 200; ++t) {
      Polynomial a = s.polynomial(f, s.uniform(0, 12));
      Polynomial b = s.polynomial(f, s.uniform(0, 6));
      auto [q, r] = divrem(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
      Polynomial c = s.polynomial(f, s.uniform(0, 5));
      EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

}  // namespace
}  // namespace qtk
