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

#include "qtk/field.hpp"

#include <set>
#include <vector>

#include "test_util.hpp"

namespace qtk {
namespace {

// Naive arithmetic on coordinate vectors, independent of the library tables.
struct NaiveField {
  std::uint32_t p, k;
  std::vector<std::uint32_t> mod;  // monic, k+1 entries

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    std::vector<std::uint32_t> prod(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
      std::uint32_t c = prod[d];
      if (c == 0) continue;
      for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * mod[i]) % p;
    }
    prod.resize(k);
    return prod;
  }
};

TEST(Field, PrimeFieldHasModulusX) {
  Field f = Field::make(2);
  EXPECT_EQ(f.q(), 2u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(Field, CanonicalModulusOfGF9) {
  // Monic quadratics over GF(3) in constant-first order; the first rootless one.
  std::vector<std::uint32_t> expect;
  for (std::uint32_t c0 = 0; c0 < 3 && expect.empty(); ++c0)
    for (std::uint32_t c1 = 0; c1 < 3 && expect.empty(); ++c1) {
      bool root = false;
      for (std::uint32_t x = 0; x < 3; ++x) root = root || (x * x + c1 * x + c0) % 3 == 0;
      if (!root) expect = {c0, c1, 1};
    }
  EXPECT_EQ(expect, (std::vector<std::uint32_t>{1, 0, 1}));
  EXPECT_EQ(Field::make(3, 2).modulus(), expect);
}

TEST(Field, Errors) {
  EXPECT_ERRC(Field::make(4), Errc::NotPrime);
  EXPECT_ERRC(Field::make(1), Errc::NotPrime);
  EXPECT_ERRC(Field::make(2, 21), Errc::SizeBoundExceeded);
  EXPECT_ERRC(Field::make(3, 0), Errc::InvalidArgument);
  EXPECT_ERRC(Field::make(5).inv(0), Errc::DivisionByZero);
  FieldElement a(Field::make(3), 1), b(Field::make(5), 1);
  EXPECT_ERRC(a + b, Errc::FieldMismatch);
}

TEST(Field, Interned) {
  EXPECT_TRUE(Field::make(3, 2) == Field::make(3, 2));
  EXPECT_TRUE(Field::parse("3^2") == Field::make(3, 2));
  EXPECT_TRUE(Field::parse("7") == Field::make(7));
  EXPECT_TRUE(Field::parse("9") == Field::make(3, 2));
  EXPECT_TRUE(Field::parse("8") == Field::make(2, 3));
  EXPECT_ERRC(Field::parse("6"), Errc::NotPrime);
  EXPECT_ERRC(Field::parse("x"), Errc::ParseError);
  EXPECT_EQ(Field::make(3, 2).name(), "3^2");
}

TEST(Field, SmallExamples) {
  Field f3 = Field::make(3), f5 = Field::make(5), f9 = Field::make(3, 2);
  EXPECT_EQ(f3.mul(2, 2), 1u);
  EXPECT_EQ(f5.inv(2), 3u);
  for (Elem x = 1; x < 9; ++x) EXPECT_EQ(f9.pow(x, 8), 1u);
  EXPECT_FALSE(f3.is_square(2));
  EXPECT_TRUE(f5.is_square(4));
  Field f4 = Field::make(2, 2);
  for (Elem x = 1; x < 4; ++x) EXPECT_TRUE(f4.is_square(x));
  EXPECT_ERRC(is_square(FieldElement(f5, 0)), Errc::ZeroInput);
}

class FieldAxioms : public ::testing::TestWithParam<std::pair<std::uint32_t, std::uint32_t>> {};

TEST_P(FieldAxioms, ExhaustiveAgainstNaive) {
  auto [p, k] = GetParam();
  Field f = Field::make(p, k);
  NaiveField nf{p, k, f.modulus()};
  const Elem q = f.q();
  for (Elem a = 0; a < q; ++a) {
    EXPECT_EQ(f.add(a, f.neg(a)), 0u);
    if (a != 0) {
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    }
    for (Elem b = 0; b < q; ++b) {
      EXPECT_EQ(f.coords(f.mul(a, b)), nf.mul(f.coords(a), f.coords(b)));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
    }
  }
  // Associativity and distributivity on a stride through the triples.
  for (Elem a = 0; a < q; a += 1 + q / 7)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; c += 1 + q / 11) {
        EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
}

TEST_P(FieldAxioms, IsSquareMatchesSquaresSet) {
  auto [p, k] = GetParam();
  Field f = Field::make(p, k);
  std::set<Elem> squares;
  for (Elem t = 1; t < f.q(); ++t) squares.insert(f.mul(t, t));
  for (Elem s = 1; s < f.q(); ++s) EXPECT_EQ(f.is_square(s), squares.count(s) == 1) << s;
  if (f.odd()) {
    Elem ns = f.least_nonsquare();
    EXPECT_FALSE(f.is_square(ns));
    for (std::uint32_t r = 0; r < f.rank(ns); ++r) {
      Elem e = f.unrank(r);
      if (e != 0) {
        EXPECT_TRUE(f.is_square(e));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms,
                         ::testing::Values(std::pair{2u, 1u}, std::pair{3u, 1u}, std::pair{2u, 2u}, std::pair{5u, 1u},
                                           std::pair{7u, 1u}, std::pair{2u, 3u}, std::pair{3u, 2u}, std::pair{2u, 4u},
                                           std::pair{5u, 2u}, std::pair{3u, 3u}, std::pair{7u, 2u}));

TEST(Field, RankOrderIsCoordinateLexicographic) {
  Field f = Field::make(3, 2);
  std::vector<std::vector<std::uint32_t>> seen;
  for (std::uint32_t r = 0; r < f.q(); ++r) seen.push_back(f.coords(f.unrank(r)));
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(f.format(f.unrank(1)), "[0 1]");
}

TEST(Embedding, PrimeSubfield) {
  Field f3 = Field::make(3), f9 = Field::make(3, 2);
  EXPECT_EQ(embed(FieldElement(f3, 2), f9), FieldElement(f9, 2));
  EXPECT_EQ(embed(FieldElement(Field::make(2), 1), Field::make(2, 3)).value(), 1u);
  EXPECT_ERRC(Embedding(f9, Field::make(3, 3)), Errc::NoEmbedding);
}

TEST(Embedding, IsRingHomomorphism) {
  for (auto [src, dst] : {std::pair{Field::make(2, 2), Field::make(2, 4)}, std::pair{Field::make(3, 2), Field::make(3, 4)},
                          std::pair{Field::make(2, 3), Field::make(2, 6)}, std::pair{Field::make(3), Field::make(3, 3)}}) {
    Embedding e(src, dst);
    std::set<Elem> image;
    for (Elem a = 0; a < src.q(); ++a) {
      image.insert(e(a));
      for (Elem b = 0; b < src.q(); ++b) {
        EXPECT_EQ(e(src.add(a, b)), dst.add(e(a), e(b)));
        EXPECT_EQ(e(src.mul(a, b)), dst.mul(e(a), e(b)));
      }
    }
    EXPECT_EQ(image.size(), src.q());
    EXPECT_EQ(e(1), 1u);
  }
}

TEST(Embedding, GeneratorGoesToLeastRootOfModulus) {
  Field src = Field::make(2, 2), dst = Field::make(2, 4);
  Embedding e(src, dst);
  const auto& m = src.modulus();
  std::uint32_t least = dst.q();
  for (std::uint32_t r = 0; r < dst.q(); ++r) {
    Elem x = dst.unrank(r);
    Elem acc = 0;
    for (auto it = m.rbegin(); it != m.rend(); ++it) acc = dst.add(dst.mul(acc, x), *it);
    if (acc == 0) {
      least = r;
      break;
    }
  }
  EXPECT_EQ(dst.rank(e(2)), least);
}

}  // namespace
}  // namespace qtk
