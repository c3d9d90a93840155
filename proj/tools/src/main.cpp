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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qtk/errors.hpp"

namespace {

using qtk::cli::Options;

int exit_code_for(qtk::Errc code) {
  switch (code) {
    case qtk::Errc::SizeBoundExceeded:
      return qtk::cli::kSizeBound;
    case qtk::Errc::MismatchFound:
    case qtk::Errc::IdentityViolated:
      return qtk::cli::kMismatch;
    default:
      return qtk::cli::kUsage;
  }
}

void add_field(CLI::App* c, Options& o) { c->add_option("--field", o.field, "field as p, q or p^k")->capture_default_str(); }
void add_n(CLI::App* c, Options& o) { c->add_option("--n", o.n, "degree parameter n")->capture_default_str(); }
void add_format(CLI::App* c, Options& o) {
  c->add_flag("--json", o.json, "one JSON object per line");
  c->add_flag("--human", o.human, "read polynomials in human form (x^2+2*x+1)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qtk: quadratic transformations of polynomials over finite fields"};
  app.require_subcommand(1);
  Options o;
  int (*run)(const Options&, std::ostream&) = nullptr;

  auto* count = app.add_subcommand("count", "closed-form counts of irreducible transforms");
  add_field(count, o);
  add_n(count, o);
  add_format(count, o);
  count->add_option("--variant", o.variant, "carlitz | sigma | ahmadi | linear | corollary")
      ->check(CLI::IsMember({"carlitz", "sigma", "ahmadi", "linear", "corollary"}))
      ->capture_default_str();
  count->add_option("--sigma", o.sigma, "sigma for the sigma and corollary variants");
  count->add_option("--expr", o.expr, "quadratic expression \"g / h\"");
  count->add_flag("--oracle", o.oracle, "also count by exhaustive enumeration");
  count->callback([&] { run = qtk::cli::cmd_count; });

  auto* reduce = app.add_subcommand("reduce", "canonical form of a quadratic expression");
  add_field(reduce, o);
  add_format(reduce, o);
  reduce->add_option("--expr", o.expr, "quadratic expression \"g / h\"")->required();
  reduce->callback([&] { run = qtk::cli::cmd_reduce; });

  auto* transform = app.add_subcommand("transform", "apply a quadratic or higher-order transformation");
  add_field(transform, o);
  add_format(transform, o);
  transform->add_option("--f", o.f, "input polynomial")->required();
  transform->add_option("--expr", o.expr, "quadratic expression \"g / h\"");
  transform->add_option("--order", o.order, "quadratic | 3 | 4 | translation")->capture_default_str();
  transform->add_flag("--monic", o.monic, "normalize the result to be monic");
  transform->callback([&] { run = qtk::cli::cmd_transform; });

  auto* reconstruct = app.add_subcommand("reconstruct", "recover f from a transformed polynomial");
  add_field(reconstruct, o);
  add_format(reconstruct, o);
  reconstruct->add_option("--f", o.f, "transformed polynomial F")->required();
  reconstruct->add_option("--sigma", o.sigma, "invert x^n f(x + sigma/x)");
  reconstruct->add_option("--expr", o.expr, "invert the transform by g/h");
  reconstruct->add_option("--order", o.order, "3 | 4 | translation");
  reconstruct->callback([&] { run = qtk::cli::cmd_reconstruct; });

  auto* dickson = app.add_subcommand("dickson", "Dickson polynomial D_n(x, a)");
  add_field(dickson, o);
  add_n(dickson, o);
  add_format(dickson, o);
  dickson->add_option("--a", o.a, "parameter a")->capture_default_str();
  dickson->callback([&] { run = qtk::cli::cmd_dickson; });

  auto* hverify = app.add_subcommand("hverify", "factor H and match every factor to a transform");
  add_field(hverify, o);
  add_n(hverify, o);
  add_format(hverify, o);
  hverify->add_option("--sigma", o.sigma, "use (x^2 + sigma)/x");
  hverify->add_option("--expr", o.expr, "use a general quadratic expression");
  hverify->callback([&] { run = qtk::cli::cmd_hverify; });

  auto* table = app.add_subcommand("table", "grid of closed-form counts");
  table->add_option("--fields", o.fields, "comma-separated field list")->capture_default_str();
  table->add_option("--max-n", o.max_n, "largest n")->capture_default_str();
  table->add_flag("--oracle", o.oracle, "also count by exhaustive enumeration");
  table->add_flag("--json", o.json, "one JSON object per line");
  table->callback([&] { run = qtk::cli::cmd_table; });

  auto* selftest = app.add_subcommand("selftest", "quick randomized consistency checks");
  selftest->add_option("--seed", o.seed, "random seed")->capture_default_str();
  selftest->add_flag("--json", o.json, "one JSON object per line");
  selftest->callback([&] { run = qtk::cli::cmd_selftest; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? qtk::cli::kOk : qtk::cli::kUsage;
  }

  try {
    return run(o, std::cout);
  } catch (const qtk::Error& e) {
    std::cerr << "qtk: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
}
