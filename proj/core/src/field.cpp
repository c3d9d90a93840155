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

#include <array>
#include <charconv>
#include <map>
#include <mutex>
#include <tuple>

namespace qtk {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> ppow;
  // Operation tables for small extension fields; empty otherwise.
  std::vector<Elem> add_tab;
  std::vector<Elem> mul_tab;
  std::vector<Elem> inv_tab;
};

}  // namespace detail

namespace {

constexpr std::uint32_t kMaxDigits = 20;
constexpr std::uint32_t kTableLimit = 256;

using Digits = std::array<std::uint32_t, kMaxDigits>;

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t{d} * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_tuple(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_tuple(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a monic-or-not polynomial over GF(p) modulo a monic divisor;
// returns true when the remainder vanishes.
bool divides_mod_p(const std::vector<std::uint32_t>& divisor, std::vector<std::uint32_t> dividend,
                   std::uint32_t p) {
  const std::size_t dd = divisor.size() - 1;
  for (std::size_t i = dividend.size(); i-- > dd;) {
    const std::uint64_t c = dividend[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) {
      const std::uint64_t sub = c * divisor[j] % p;
      dividend[i - dd + j] = static_cast<std::uint32_t>((dividend[i - dd + j] + p - sub) % p);
    }
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (dividend[i] != 0) return false;
  return true;
}

// Sets coeffs (length d, constant first) to the tuple with the given index,
// where the constant term is the most significant digit.
void tuple_from_index(std::uint64_t index, std::uint32_t base, std::vector<std::uint32_t>& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % base);
    index /= base;
  }
}

bool irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size() - 1);
  if (n <= 1) return n == 1;
  for (std::uint32_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    std::vector<std::uint32_t> low(d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      tuple_from_index(idx, p, low);
      std::vector<std::uint32_t> divisor(low);
      divisor.push_back(1);
      if (divides_mod_p(divisor, f, p)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t k) {
  std::vector<std::uint32_t> low(k);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    tuple_from_index(idx, p, low);
    std::vector<std::uint32_t> f(low);
    f.push_back(1);
    if (irreducible_mod_p(f, p)) return f;
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");  // unreachable
}

Digits decode(const detail::FieldData& d, Elem e) {
  Digits out{};
  for (std::uint32_t i = 0; i < d.k; ++i) {
    out[i] = e % d.p;
    e /= d.p;
  }
  return out;
}

Elem encode(const detail::FieldData& d, const Digits& digits) {
  Elem e = 0;
  for (std::uint32_t i = d.k; i-- > 0;) e = e * d.p + digits[i];
  return e;
}

Elem generic_add(const detail::FieldData& d, Elem a, Elem b) {
  if (d.k == 1) {
    const Elem s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  if (d.p == 2) return a ^ b;
  Digits x = decode(d, a), y = decode(d, b);
  for (std::uint32_t i = 0; i < d.k; ++i) {
    x[i] += y[i];
    if (x[i] >= d.p) x[i] -= d.p;
  }
  return encode(d, x);
}

Elem generic_mul(const detail::FieldData& d, Elem a, Elem b) {
  if (d.k == 1) return static_cast<Elem>(std::uint64_t{a} * b % d.p);
  const Digits x = decode(d, a), y = decode(d, b);
  std::array<std::uint64_t, 2 * kMaxDigits> prod{};
  for (std::uint32_t i = 0; i < d.k; ++i) {
    if (x[i] == 0) continue;
    for (std::uint32_t j = 0; j < d.k; ++j) prod[i + j] += std::uint64_t{x[i]} * y[j];
  }
  const std::uint32_t top = 2 * d.k - 1;
  for (std::uint32_t i = 0; i < top; ++i) prod[i] %= d.p;
  for (std::uint32_t i = top; i-- > d.k;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (std::uint32_t j = 0; j < d.k; ++j) {
      prod[i - d.k + j] = (prod[i - d.k + j] + (d.p - c) * d.modulus[j]) % d.p;
    }
  }
  Digits out{};
  for (std::uint32_t i = 0; i < d.k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return encode(d, out);
}

Elem generic_pow(const detail::FieldData& d, Elem a, std::uint64_t e) {
  Elem result = 1;
  while (e != 0) {
    if (e & 1) result = generic_mul(d, result, a);
    a = generic_mul(d, a, a);
    e >>= 1;
  }
  return result;
}

std::shared_ptr<const detail::FieldData> build_field(std::uint32_t p, std::uint32_t k) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->k = k;
  d->ppow.assign(k + 1, 1);
  for (std::uint32_t i = 1; i <= k; ++i) d->ppow[i] = d->ppow[i - 1] * p;
  d->q = d->ppow[k];
  d->modulus = canonical_modulus(p, k);
  if (k > 1 && d->q <= kTableLimit) {
    const std::uint32_t q = d->q;
    d->add_tab.resize(std::size_t{q} * q);
    d->mul_tab.resize(std::size_t{q} * q);
    d->inv_tab.assign(q, 0);
    for (Elem a = 0; a < q; ++a) {
      for (Elem b = 0; b < q; ++b) {
        d->add_tab[a * q + b] = generic_add(*d, a, b);
        const Elem m = generic_mul(*d, a, b);
        d->mul_tab[a * q + b] = m;
        if (m == 1) d->inv_tab[a] = b;
      }
    }
  }
  return d;
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(Errc::SizeBoundExceeded, "field order exceeds 2^20");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>>
      registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) slot = build_field(p, k);
  return Field(slot);
}

Field Field::parse(std::string_view text) {
  auto parse_uint = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      throw Error(Errc::ParseError, "bad field notation '" + std::string(text) + "'");
    return v;
  };
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    std::uint32_t q = parse_uint(text);
    std::uint32_t p = 2;
    while (p < q && q % p != 0) ++p;
    std::uint32_t k = 0, r = q;
    for (; r > 1 && r % p == 0; r /= p) ++k;
    if (q < 2 || r != 1) return make(q, 1);
    return make(p, k);
  }
  return make(parse_uint(text.substr(0, caret)), parse_uint(text.substr(caret + 1)));
}

std::uint32_t Field::p() const noexcept { return d_->p; }
std::uint32_t Field::k() const noexcept { return d_->k; }
std::uint32_t Field::q() const noexcept { return d_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return d_->modulus; }

std::string Field::name() const {
  return k() == 1 ? std::to_string(p()) : std::to_string(p()) + "^" + std::to_string(k());
}

Elem Field::from_int(long long v) const noexcept {
  const long long p = d_->p;
  return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() != k()) throw Error(Errc::InvalidArgument, "coordinate count must equal k");
  Digits digits{};
  for (std::uint32_t i = 0; i < k(); ++i) {
    if (coords[i] >= p()) throw Error(Errc::InvalidArgument, "coordinate out of range");
    digits[i] = coords[i];
  }
  return encode(*d_, digits);
}

std::vector<std::uint32_t> Field::coords(Elem e) const {
  const Digits digits = decode(*d_, e);
  return {digits.begin(), digits.begin() + k()};
}

std::uint32_t Field::rank(Elem e) const noexcept {
  if (k() == 1) return e;
  const Digits digits = decode(*d_, e);
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k(); ++i) r = r * p() + digits[i];
  return r;
}

Elem Field::unrank(std::uint32_t r) const noexcept {
  if (k() == 1) return r;
  Digits digits{};
  for (std::uint32_t i = k(); i-- > 0;) {
    digits[i] = r % p();
    r /= p();
  }
  return encode(*d_, digits);
}

Elem Field::add(Elem a, Elem b) const noexcept {
  if (!d_->add_tab.empty()) return d_->add_tab[a * d_->q + b];
  return generic_add(*d_, a, b);
}

Elem Field::neg(Elem a) const noexcept {
  if (a == 0 || d_->p == 2) return a;
  if (d_->k == 1) return d_->p - a;
  Digits x = decode(*d_, a);
  for (std::uint32_t i = 0; i < d_->k; ++i) x[i] = x[i] ? d_->p - x[i] : 0;
  return encode(*d_, x);
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
  if (!d_->mul_tab.empty()) return d_->mul_tab[a * d_->q + b];
  return generic_mul(*d_, a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (!d_->inv_tab.empty()) return d_->inv_tab[a];
  if (d_->k == 1) return inv_mod(a, d_->p);
  return generic_pow(*d_, a, d_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (a == 0) return e == 0 ? 1 : 0;
  e %= (d_->q - 1);
  Elem result = 1;
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem Field::pow(Elem a, const BigInt& e) const {
  if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (a == 0) return e == 0 ? 1 : 0;
  const BigInt reduced = e % (d_->q - 1);
  return pow(a, reduced.convert_to<std::uint64_t>());
}

bool Field::is_square(Elem a) const {
  if (a == 0) throw Error(Errc::ZeroInput, "is_square requires a nonzero element");
  if (d_->p == 2) return true;
  return pow(a, (d_->q - 1) / 2) == 1;
}

Elem Field::least_nonsquare() const {
  if (d_->p == 2) throw Error(Errc::InvalidArgument, "no nonsquares in characteristic 2");
  for (std::uint32_t r = 1; r < d_->q; ++r) {
    const Elem e = unrank(r);
    if (e != 0 && !is_square(e)) return e;
  }
  throw Error(Errc::InvalidArgument, "no nonsquare found");  // unreachable for odd q
}

std::string Field::format(Elem e) const {
  if (k() == 1) return std::to_string(e);
  std::string out = "[";
  const Digits digits = decode(*d_, e);
  for (std::uint32_t i = 0; i < k(); ++i) {
    if (i) out += ' ';
    out += std::to_string(digits[i]);
  }
  return out + "]";
}

FieldElement::FieldElement(Field f, Elem v) : field_(std::move(f)), v_(v) {
  if (!field_.contains(v_)) throw Error(Errc::InvalidArgument, "element out of range");
}

namespace {
void require_same(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(Errc::FieldMismatch, "GF(" + a.name() + ") vs GF(" + b.name() + ")");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same(field_, o.field_);
  return {field_, field_.div(v_, o.v_)};
}

bool is_square(const FieldElement& s) { return s.field().is_square(s.value()); }

namespace {

Elem least_modulus_root(const Field& source, const Field& target) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, Elem> cache;
  const auto key = std::make_tuple(source.p(), source.k(), target.k());
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto& mod = source.modulus();
  for (std::uint32_t r = 0; r < target.q(); ++r) {
    const Elem t = target.unrank(r);
    Elem acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = target.add(target.mul(acc, t), mod[i]);
    if (acc == 0) {
      std::lock_guard<std::mutex> lock(mu);
      cache.emplace(key, t);
      return t;
    }
  }
  throw Error(Errc::NoEmbedding, "source modulus has no root in target");  // unreachable
}

}  // namespace

Embedding::Embedding(const Field& source, const Field& target) : source_(source), target_(target) {
  if (source.p() != target.p() || target.k() % source.k() != 0)
    throw Error(Errc::NoEmbedding,
                "GF(" + source.name() + ") does not embed in GF(" + target.name() + ")");
  const Elem root = source.k() == 1 ? Elem{1} : least_modulus_root(source, target);
  generator_powers_.assign(source.k(), 1);
  for (std::uint32_t i = 1; i < source.k(); ++i)
    generator_powers_[i] = target.mul(generator_powers_[i - 1], root);
}

Elem Embedding::operator()(Elem e) const {
  if (!source_.contains(e)) throw Error(Errc::InvalidArgument, "element out of range");
  const auto c = source_.coords(e);
  Elem acc = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) acc = target_.add(acc, target_.mul(c[i], generator_powers_[i]));
  return acc;
}

FieldElement embed(const FieldElement& e, const Field& target) {
  return {target, Embedding(e.field(), target)(e.value())};
}

}  // namespace qtk
