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

#ifndef QTK_H_FACTOR_HPP
#define QTK_H_FACTOR_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtk/moebius.hpp"
#include "qtk/quad_transform.hpp"

namespace qtk {

/// Default cap on q^n + 1 for H constructions; QTK_SIZE_BOUND overrides it.
inline constexpr std::uint64_t kDefaultHDegreeBound = 4096;
std::uint64_t h_degree_bound();

/// (a, b, c) = (g2 h1 - g1 h2, g0 h2 - g2 h0, g1 h0 - g0 h1).
Triple cross_product_abc(const QuadRationalExpr& r);

struct HSpec {
  Field field;
  std::uint64_t n = 1;
  Triple abc;
  std::optional<QuadRationalExpr> source;

  /// Throws SingularTriple or Char2Degenerate.
  HSpec(Field f, std::uint64_t n, Triple abc);
  static HSpec from_expr(const QuadRationalExpr& r, std::uint64_t n);
  /// (1, 0, -sigma).
  static HSpec from_sigma(const Field& f, Elem sigma, std::uint64_t n);
};

/// a x^(q^n + 1) - b (x^(q^n) + x) + c.
Polynomial build_h(const HSpec& spec, std::uint64_t degree_bound = h_degree_bound());
/// (x^(q^n + 1) - sigma) / gcd(x^2 - sigma, x^(q^n - 1) - 1).
Polynomial build_h_meyn(const Field& f, Elem sigma, std::uint64_t n,
                        std::uint64_t degree_bound = h_degree_bound());

/// (ax - b) H' - aH, checked against the constant b^2 - ac.
Elem h_squarefree_witness(const HSpec& spec, std::uint64_t degree_bound = h_degree_bound());

struct FactorEntry {
  Polynomial factor;
  std::size_t multiplicity = 1;
  /// Equal to monic(ax^2 - 2bx + c), which is excluded from matching.
  bool exceptional = false;
  /// Equal to monic(h) for an irreducible quadratic denominator h: the image
  /// of the point at infinity, F(X, Y) = Y, rather than of a polynomial f.
  bool pole = false;
  /// A monic f with monic(transform(f, R)) = factor, when one was found.
  std::optional<Polynomial> f;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct HReport {
  std::string kind;
  Field field;
  std::uint64_t n = 0;
  Triple abc;
  std::optional<Elem> sigma;
  std::optional<QuadRationalExpr> source;
  Polynomial h;
  std::vector<FactorEntry> factors;
  /// Irreducible transforms found by enumerating f of every permitted degree.
  std::vector<Polynomial> enumerated;
  /// deg f -> number of matched factors.
  std::map<std::size_t, std::size_t> f_degrees;
  std::vector<CheckOutcome> checks;

  bool ok() const;
  std::vector<std::string> failures() const;
  std::string to_json() const;
};

/// Factors build_h_meyn and compares it with the product of every
/// sigma-self-reciprocal irreducible of degree dividing 2n but not n.
HReport meyn_product_report(const Field& f, Elem sigma, std::uint64_t n,
                            std::uint64_t degree_bound = h_degree_bound());
/// Factors H for the cross-product triple of r and matches each factor with
/// some f_R; conversely checks that every irreducible f_R of a permitted
/// degree divides H.
HReport meyn_generalized_report(const QuadRationalExpr& r, std::uint64_t n,
                                std::uint64_t degree_bound = h_degree_bound());

/// The report builders above, throwing MismatchFound on any failed check.
HReport verify_meyn_product(const Field& f, Elem sigma, std::uint64_t n,
                            std::uint64_t degree_bound = h_degree_bound());
HReport verify_meyn_generalized(const QuadRationalExpr& r, std::uint64_t n,
                                std::uint64_t degree_bound = h_degree_bound());

/// f with monic(transform(f, r)) = monic(F), found by carrying F along the
/// reduction trail of r to (x^2 + sigma)/x, reconstructing there and carrying
/// f back.  nullopt when no such f exists.
std::optional<Polynomial> match_transform(const Polynomial& F, const QuadRationalExpr& r);

struct DegreeSummary {
  std::uint64_t degree = 0;
  int epsilon = 0;
};

/// deg H - deg gcd(ax^2 - 2bx + c, x^(q^n) - x), checked against q^n - eps^n.
DegreeSummary product_degree_summary(const HSpec& spec, std::uint64_t degree_bound = h_degree_bound());

}  // namespace qtk

#endif  // QTK_H_FACTOR_HPP
