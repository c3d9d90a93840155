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

#include "commands.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qtk/counting.hpp"
#include "qtk/errors.hpp"
#include "qtk/factor.hpp"
#include "qtk/h_factor.hpp"
#include "qtk/higher_order.hpp"
#include "qtk/moebius.hpp"
#include "qtk/quad_transform.hpp"
#include "qtk/random.hpp"
#include "qtk/text_format.hpp"

namespace qtk::cli {
namespace {

using nlohmann::ordered_json;

PolyFormat poly_format(const Options& o) { return o.human ? PolyFormat::Human : PolyFormat::Coefficients; }

ordered_json poly_json(const Polynomial& p) {
  return {{"coeffs", format_poly(p)}, {"human", format_human(p)}, {"degree", p.is_zero() ? -1 : static_cast<long long>(p.deg())}};
}

std::string render_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.contains("human") && v.contains("coeffs")) {
    return v["human"].get<std::string>() + "  {" + v["coeffs"].get<std::string>() + "}";
  }
  return v.dump();
}

// One JSON object per line, or "key: value" lines followed by a blank line.
void emit(const Options& o, std::ostream& os, const ordered_json& j) {
  if (o.json) {
    os << j.dump() << '\n';
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_array()) {
      os << k << ":\n";
      for (const auto& e : v) os << "  " << render_value(e) << '\n';
    } else {
      os << k << ": " << render_value(v) << '\n';
    }
  }
  os << '\n';
}

Field parse_field(const Options& o) { return Field::parse(o.field); }

Elem require_sigma(const Field& f, const Options& o) {
  if (o.sigma.empty()) throw Error(Errc::InvalidArgument, "--sigma is required");
  return parse_element(f, o.sigma);
}

QuadRationalExpr require_expr(const Field& f, const Options& o) {
  if (o.expr.empty()) throw Error(Errc::InvalidArgument, "--expr is required");
  return QuadRationalExpr::parse(f, o.expr, poly_format(o));
}

Polynomial require_poly(const Field& f, const Options& o) {
  if (o.f.empty()) throw Error(Errc::InvalidArgument, "--f is required");
  return parse_poly(f, o.f, poly_format(o));
}

HigherOrder parse_order(const std::string& s) {
  if (s == "3" || s == "order3") return HigherOrder::Three;
  if (s == "4" || s == "order4") return HigherOrder::Four;
  if (s == "translation") return HigherOrder::TranslationP;
  throw Error(Errc::InvalidArgument, "unknown --order '" + s + "'");
}

std::vector<Field> parse_fields(const std::string& list) {
  std::vector<Field> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Field::parse(item));
  }
  std::sort(out.begin(), out.end(), [](const Field& a, const Field& b) { return a.q() < b.q(); });
  return out;
}

ordered_json count_json(const Field& f, std::uint64_t n, const std::string& variant, const CountResult& r) {
  ordered_json j;
  j["command"] = "count";
  j["field"] = f.name();
  j["n"] = n;
  j["variant"] = variant;
  j["value"] = r.value.str();
  j["branch"] = r.formula_branch;
  j["epsilon"] = r.epsilon;
  j["delta"] = r.delta;
  return j;
}

}  // namespace

int cmd_count(const Options& o, std::ostream& os) {
  const Field f = parse_field(o);
  CountResult res;
  std::function<BigInt()> oracle;
  ordered_json extra;
  if (o.variant == "carlitz") {
    CountQuery q{f, o.n, CarlitzSrim{}};
    res = count_formula(q);
    oracle = [q] { return BigInt(brute_count(q)); };
  } else if (o.variant == "sigma") {
    const Elem s = require_sigma(f, o);
    CountQuery q{f, o.n, SigmaForm{s}};
    res = count_formula(q);
    oracle = [q] { return BigInt(brute_count(q)); };
    extra["sigma"] = f.format(s);
  } else if (o.variant == "ahmadi") {
    const QuadRationalExpr r = require_expr(f, o);
    CountQuery q{f, o.n, GeneralQuadratic{r}};
    res = count_formula(q);
    oracle = [q] { return BigInt(brute_count(q)); };
    extra["expr"] = r.to_string();
  } else if (o.variant == "linear") {
    const QuadRationalExpr r = require_expr(f, o);
    CountQuery q{f, 1, LinearInput{r}};
    res = count_formula(q);
    oracle = [q] { return BigInt(brute_count(q)); };
    extra["expr"] = r.to_string();
  } else if (o.variant == "corollary") {
    const Elem s = require_sigma(f, o);
    res = count_corollary(f, o.n, s);
    oracle = [f, s, n = o.n] { return BigInt(brute_count_invariant(f, n, s)); };
    extra["sigma"] = f.format(s);
  } else {
    throw Error(Errc::InvalidArgument, "unknown --variant '" + o.variant + "'");
  }
  ordered_json j = count_json(f, o.variant == "linear" ? 1 : o.n, o.variant, res);
  if (!extra.is_null()) j.update(extra);
  int code = kOk;
  if (o.oracle) {
    const BigInt b = oracle();
    j["oracle"] = b.str();
    j["verdict"] = b == res.value ? "MATCH" : "MISMATCH";
    if (b != res.value) code = kMismatch;
  }
  emit(o, os, j);
  return code;
}

int cmd_reduce(const Options& o, std::ostream& os) {
  const Field f = parse_field(o);
  const QuadRationalExpr r = require_expr(f, o);
  const Reduction red = reduce_canonical(r);
  ordered_json j;
  j["command"] = "reduce";
  j["field"] = f.name();
  j["expr"] = r.to_string();
  const bool xsq = red.form.kind == CanonicalForm::Kind::XSquared;
  j["canonical"] = xsq ? "x^2" : "x+sigma/x";
  if (!xsq) j["sigma"] = f.format(red.form.sigma);
  j["class"] = std::string(to_string(classify_sigma(r)));
  j["result"] = red.trail.end.to_string();
  j["already_canonical"] = std::none_of(red.trail.steps.begin(), red.trail.steps.end(),
                                        [](const TrailStep& s) { return !s.is_trivial(); });
  j["trail"] = ordered_json::array();
  for (const auto& s : red.trail.steps) j["trail"].push_back(s.to_string(f));
  const bool replay_ok = red.trail.replay() == red.trail.end;
  j["replay"] = replay_ok ? "MATCH" : "MISMATCH";
  emit(o, os, j);
  return replay_ok ? kOk : kMismatch;
}

int cmd_transform(const Options& o, std::ostream& os) {
  const Field f = parse_field(o);
  const Polynomial p = require_poly(f, o);
  ordered_json j;
  j["command"] = "transform";
  j["field"] = f.name();
  j["f"] = poly_json(p);
  if (o.order == "quadratic") {
    const QuadRationalExpr r = require_expr(f, o);
    const TransformResult t = transform(p, r, o.monic);
    j["expr"] = r.to_string();
    j["result"] = poly_json(t.result);
    j["degree_dropped"] = t.degree_dropped;
  } else {
    const HigherOrder ord = parse_order(o.order);
    HigherTransformResult t = transform_higher(p, ord);
    if (o.monic) t.result = t.result.monic();
    j["order"] = std::string(to_string(ord));
    j["result"] = poly_json(t.result);
    j["degree_dropped"] = t.degree_dropped;
  }
  emit(o, os, j);
  return kOk;
}

int cmd_reconstruct(const Options& o, std::ostream& os) {
  const Field f = parse_field(o);
  const Polynomial F = require_poly(f, o);
  ordered_json j;
  j["command"] = "reconstruct";
  j["field"] = f.name();
  j["F"] = poly_json(F);
  if (!o.sigma.empty()) {
    const Elem s = parse_element(f, o.sigma);
    j["sigma"] = f.format(s);
    j["f"] = poly_json(reconstruct(F, s));
  } else if (!o.expr.empty()) {
    const QuadRationalExpr r = require_expr(f, o);
    auto g = match_transform(F, r);
    if (!g) throw Error(Errc::NoSolution, "no f with monic(f_R) = monic(F)");
    j["expr"] = r.to_string();
    j["f"] = poly_json(*g);
  } else {
    const HigherOrder ord = parse_order(o.order);
    j["order"] = std::string(to_string(ord));
    j["f"] = poly_json(reconstruct_higher(F, ord));
  }
  emit(o, os, j);
  return kOk;
}

int cmd_dickson(const Options& o, std::ostream& os) {
  const Field f = parse_field(o);
  const Elem a = parse_element(f, o.a);
  ordered_json j;
  j["command"] = "dickson";
  j["field"] = f.name();
  j["n"] = o.n;
  j["a"] = f.format(a);
  j["result"] = poly_json(dickson(f, DicksonParams{static_cast<unsigned>(o.n), a}));
  emit(o, os, j);
  return kOk;
}

int cmd_hverify(const Options& o, std::ostream& os) {
  const Field f = parse_field(o);
  HReport rep = o.expr.empty() ? meyn_product_report(f, require_sigma(f, o), o.n)
                               : meyn_generalized_report(require_expr(f, o), o.n);
  ordered_json j;
  j["command"] = "hverify";
  j.update(ordered_json::parse(rep.to_json()));
  j["verdict"] = rep.ok() ? "MATCH" : "MISMATCH";
  if (o.json) {
    emit(o, os, j);
  } else {
    os << "kind: " << rep.kind << "\nfield: " << f.name() << "\nn: " << o.n << "\nabc: " << f.format(rep.abc.a) << ' '
       << f.format(rep.abc.b) << ' ' << f.format(rep.abc.c) << "\nH: " << format_human(rep.h) << "\nfactors:\n";
    for (const auto& e : rep.factors) {
      os << "  " << format_human(e.factor);
      if (e.exceptional) os << "  (fixed-point factor)";
      if (e.pole) os << "  (pole factor)";
      if (e.f) os << "  <- f = " << format_human(*e.f, 'y');
      os << '\n';
    }
    os << "checks:\n";
    for (const auto& c : rep.checks) {
      os << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : "  " + c.detail) << '\n';
    }
    os << "verdict: " << (rep.ok() ? "MATCH" : "MISMATCH") << "\n\n";
  }
  return rep.ok() ? kOk : kMismatch;
}

int cmd_table(const Options& o, std::ostream& os) {
  struct Row {
    Field f;
    std::uint64_t n;
    std::string variant;
    CountQuery query;
  };
  std::vector<Row> rows;
  for (const Field& f : parse_fields(o.fields)) {
    for (std::uint64_t n = 1; n <= o.max_n; ++n) {
      rows.push_back({f, n, "carlitz", CountQuery{f, n, CarlitzSrim{}}});
      if (f.odd()) {
        rows.push_back({f, n, "sigma-nonsquare", CountQuery{f, n, SigmaForm{f.least_nonsquare()}}});
        rows.push_back({f, n, "sigma-square", CountQuery{f, n, SigmaForm{1}}});
      }
    }
  }
  int code = kOk;
  if (!o.json) {
    os << "q\tn\tvariant\tsigma\tvalue\tepsilon\tbranch" << (o.oracle ? "\toracle\tverdict" : "") << '\n';
  }
  for (const auto& row : rows) {
    const CountResult res = count_formula(row.query);
    const Elem sigma = std::holds_alternative<SigmaForm>(row.query.variant) ? std::get<SigmaForm>(row.query.variant).sigma : 1;
    ordered_json j;
    j["q"] = row.f.q();
    j["field"] = row.f.name();
    j["n"] = row.n;
    j["variant"] = row.variant;
    j["sigma"] = row.f.format(sigma);
    j["value"] = res.value.str();
    j["epsilon"] = res.epsilon;
    j["branch"] = res.formula_branch;
    std::string verdict;
    BigInt brute;
    if (o.oracle) {
      brute = BigInt(brute_count(row.query));
      verdict = brute == res.value ? "MATCH" : "MISMATCH";
      j["oracle"] = brute.str();
      j["verdict"] = verdict;
      if (brute != res.value) code = kMismatch;
    }
    if (o.json) {
      os << j.dump() << '\n';
    } else {
      os << row.f.q() << '\t' << row.n << '\t' << row.variant << '\t' << row.f.format(sigma) << '\t' << res.value.str()
         << '\t' << res.epsilon << '\t' << res.formula_branch;
      if (o.oracle) os << '\t' << brute.str() << '\t' << verdict;
      os << '\n';
    }
  }
  return code;
}

int cmd_selftest(const Options& o, std::ostream& os) {
  Sampler s(o.seed);
  const std::vector<Field> fields = {Field::make(2), Field::make(3), Field::make(2, 2), Field::make(5),
                                     Field::make(7), Field::make(3, 2)};
  int code = kOk;
  auto report = [&](const std::string& name, std::size_t cases, std::size_t failures) {
    ordered_json j;
    j["command"] = "selftest";
    j["check"] = name;
    j["seed"] = o.seed;
    j["cases"] = cases;
    j["failures"] = failures;
    j["verdict"] = failures == 0 ? "PASS" : "FAIL";
    if (failures) code = kMismatch;
    if (o.json) {
      os << j.dump() << '\n';
    } else {
      os << (failures == 0 ? "PASS " : "FAIL ") << name << "  (" << cases << " cases, " << failures << " failures)\n";
    }
  };

  std::size_t cases = 0, bad = 0;
  for (const Field& f : fields) {
    for (int t = 0; t < 20; ++t, ++cases) {
      const QuadRationalExpr r = s.quad_expr(f);
      const Reduction red = reduce_canonical(r);
      if (!(red.trail.replay() == red.trail.end && red.trail.end == red.form.as_expr(f))) ++bad;
    }
  }
  report("reduction-replay", cases, bad);

  cases = bad = 0;
  for (const Field& f : fields) {
    for (int t = 0; t < 20; ++t, ++cases) {
      const Elem sigma = s.nonzero(f);
      const Polynomial g = s.monic(f, s.uniform(1, 4));
      const Polynomial F = transform(g, QuadRationalExpr::sigma_form(f, sigma)).result;
      if (!(reconstruct(F, sigma) == g)) ++bad;
    }
  }
  report("reconstruct-roundtrip", cases, bad);

  cases = bad = 0;
  for (const Field& f : fields) {
    for (std::uint64_t n = 1; n <= 2; ++n, ++cases) {
      CountQuery q{f, n, CarlitzSrim{}};
      if (count_formula(q).value != BigInt(brute_count(q))) ++bad;
    }
  }
  report("carlitz-count", cases, bad);

  cases = bad = 0;
  for (const Field& f : fields) {
    if (f.q() > 5) continue;
    for (Elem sigma = 1; sigma < f.q(); ++sigma, ++cases) {
      if (!meyn_product_report(f, sigma, 2).ok()) ++bad;
    }
  }
  report("h-factorization", cases, bad);

  cases = bad = 0;
  for (const Field& f : fields) {
    for (HigherOrder ord : {HigherOrder::Three, HigherOrder::Four, HigherOrder::TranslationP}) {
      if (ord == HigherOrder::Four && f.char2()) continue;
      for (int t = 0; t < 5; ++t, ++cases) {
        const Polynomial g = s.monic(f, s.uniform(1, 3));
        if (!(reconstruct_higher(transform_higher(g, ord).result, ord) == g)) ++bad;
      }
    }
  }
  report("higher-order-roundtrip", cases, bad);
  return code;
}

}  // namespace qtk::cli
