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

#include "qtk/text_format.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace qtk {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw Error(Errc::ParseError, std::string(what) + " in '" + std::string(text) + "'");
}

long long parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail("bad integer", context);
  return negative ? -v : v;
}

// Splits at `sep` occurring outside square brackets.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++depth;
    if (s[i] == ']') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

std::vector<std::string_view> split_ws_top(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = std::string_view::npos;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    const bool end = i == s.size();
    const char ch = end ? ' ' : s[i];
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    const bool space = std::isspace(static_cast<unsigned char>(ch)) && depth == 0;
    if (space) {
      if (start != std::string_view::npos) parts.push_back(s.substr(start, i - start));
      start = std::string_view::npos;
    } else if (start == std::string_view::npos) {
      start = i;
    }
  }
  return parts;
}

bool looks_human(std::string_view s) {
  for (char c : s)
    if (std::isalpha(static_cast<unsigned char>(c))) return true;
  return false;
}

void add_term(const Field& f, std::vector<Elem>& coeffs, std::size_t exponent, Elem c) {
  if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
  coeffs[exponent] = f.add(coeffs[exponent], c);
}

Polynomial parse_human(const Field& f, std::string_view text) {
  std::string compact;
  int bracket = 0;
  for (char c : text) {
    if (c == '[') ++bracket;
    if (c == ']') --bracket;
    if (bracket > 0 || !std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  if (compact.empty()) fail("empty polynomial", text);
  std::vector<Elem> coeffs;
  std::size_t i = 0;
  while (i < compact.size()) {
    bool negative = false;
    if (compact[i] == '+' || compact[i] == '-') {
      negative = compact[i] == '-';
      ++i;
    } else if (i != 0) {
      fail("expected + or -", text);
    }
    std::size_t j = i;
    int depth = 0;
    while (j < compact.size() && (depth > 0 || (compact[j] != '+' && compact[j] != '-'))) {
      if (compact[j] == '[') ++depth;
      if (compact[j] == ']') --depth;
      ++j;
    }
    const std::string_view term(compact.data() + i, j - i);
    if (term.empty()) fail("empty term", text);
    const auto var_pos = term.find_first_of("xyz");
    Elem c = 1;
    std::size_t exponent = 0;
    if (var_pos == std::string_view::npos) {
      c = parse_element(f, term);
    } else {
      std::string_view coef = term.substr(0, var_pos);
      if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
      if (!coef.empty()) c = parse_element(f, coef);
      std::string_view rest = term.substr(var_pos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else {
        if (rest.front() != '^') fail("expected ^ after variable", text);
        rest.remove_prefix(1);
        const long long e = parse_int(rest, text);
        if (e < 0) fail("negative exponent", text);
        exponent = static_cast<std::size_t>(e);
      }
    }
    add_term(f, coeffs, exponent, negative ? f.neg(c) : c);
    i = j;
  }
  return {f, std::move(coeffs)};
}

}  // namespace

Elem parse_element(const Field& f, std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) fail("empty element", text);
  if (s.front() != '[') return f.from_int(parse_int(s, text));
  if (s.back() != ']') fail("unterminated tuple", text);
  const auto parts = split_ws_top(s.substr(1, s.size() - 2));
  if (parts.size() != f.k()) fail("tuple length must equal k=" + std::to_string(f.k()), text);
  std::vector<std::uint32_t> coords;
  for (auto part : parts) {
    const long long v = parse_int(part, text);
    coords.push_back(static_cast<std::uint32_t>(((v % f.p()) + f.p()) % f.p()));
  }
  return f.from_coords(coords);
}

std::string format_poly(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.field().format(p.coeffs()[i]);
  }
  return out;
}

std::string format_human(const Polynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Elem c = p.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    const std::string cs = p.field().format(c);
    if (i == 0) {
      out += cs;
      continue;
    }
    if (c != 1) out += cs + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial parse_poly(const Field& f, std::string_view text, PolyFormat fmt) {
  const std::string_view s = trim(text);
  if (s.empty()) fail("empty polynomial", text);
  if (fmt == PolyFormat::Human || (fmt == PolyFormat::Auto && looks_human(s))) return parse_human(f, s);
  std::vector<Elem> coeffs;
  for (auto part : split_top(s, ',')) coeffs.push_back(parse_element(f, part));
  return {f, std::move(coeffs)};
}

std::pair<Polynomial, Polynomial> parse_fraction(const Field& f, std::string_view text, PolyFormat fmt) {
  const auto parts = split_top(text, '/');
  if (parts.size() != 2) fail("expected exactly one top-level '/'", text);
  return {parse_poly(f, parts[0], fmt), parse_poly(f, parts[1], fmt)};
}

std::array<Elem, 4> parse_matrix(const Field& f, std::string_view text) {
  const std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("matrix must be bracketed", text);
  const auto rows = split_top(s.substr(1, s.size() - 2), ';');
  if (rows.size() != 2) fail("matrix needs two rows", text);
  std::array<Elem, 4> out{};
  for (std::size_t r = 0; r < 2; ++r) {
    const auto entries = split_ws_top(rows[r]);
    if (entries.size() != 2) fail("matrix rows need two entries", text);
    out[2 * r] = parse_element(f, entries[0]);
    out[2 * r + 1] = parse_element(f, entries[1]);
  }
  return out;
}

}  // namespace qtk
