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

#include <algorithm>
#include <limits>
#include <ostream>

#include "qtk/text_format.hpp"

namespace qtk {

namespace {

// Lazy-reduction product over a prime field.
std::vector<Elem> mul_prime(const std::vector<Elem>& a, const std::vector<Elem>& b, std::uint64_t p) {
  const std::uint64_t max_prod = (p - 1) * (p - 1);
  const std::uint64_t budget = max_prod == 0 ? std::numeric_limits<std::uint64_t>::max()
                                             : std::numeric_limits<std::uint64_t>::max() / max_prod;
  const std::vector<Elem>& shorter = a.size() <= b.size() ? a : b;
  const std::vector<Elem>& longer = a.size() <= b.size() ? b : a;
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  if (shorter.size() <= budget) {
    for (std::size_t i = 0; i < shorter.size(); ++i) {
      const std::uint64_t s = shorter[i];
      if (s == 0) continue;
      std::uint64_t* out = acc.data() + i;
      for (std::size_t j = 0; j < longer.size(); ++j) out[j] += s * longer[j];
    }
  } else {
    for (std::size_t i = 0; i < shorter.size(); ++i)
      for (std::size_t j = 0; j < longer.size(); ++j)
        acc[i + j] = (acc[i + j] + std::uint64_t{shorter[i]} * longer[j]) % p;
  }
  std::vector<Elem> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Elem>(acc[i] % p);
  return out;
}

}  // namespace

Polynomial::Polynomial(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (Elem e : c_)
    if (!field_.contains(e)) throw Error(Errc::InvalidArgument, "coefficient out of range");
  trim();
}

Polynomial Polynomial::from_ints(const Field& f, std::initializer_list<long long> coeffs) {
  return from_ints(f, std::vector<long long>(coeffs));
}

Polynomial Polynomial::from_ints(const Field& f, const std::vector<long long>& coeffs) {
  std::vector<Elem> c;
  c.reserve(coeffs.size());
  for (long long v : coeffs) c.push_back(f.from_int(v));
  return {f, std::move(c)};
}

Polynomial Polynomial::monomial(const Field& f, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return {f, std::move(coeffs)};
}

void Polynomial::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scale(field_.inv(lead()));
}

Polynomial Polynomial::scale(Elem s) const {
  Polynomial out(field_);
  if (s == 0) return out;
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = field_.mul(c_[i], s);
  return out;
}

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field()))
    throw Error(Errc::FieldMismatch,
                "polynomials over GF(" + a.field().name() + ") and GF(" + b.field().name() + ")");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_field(*this, o);
  std::vector<Elem> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.add(coeff(i), o.coeff(i));
  return {field_, std::move(out)};
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_same_field(*this, o);
  std::vector<Elem> out(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.sub(coeff(i), o.coeff(i));
  return {field_, std::move(out)};
}

Polynomial Polynomial::operator-() const {
  Polynomial out(*this);
  for (Elem& e : out.c_) e = field_.neg(e);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_field(*this, o);
  if (is_zero() || o.is_zero()) return Polynomial(field_);
  if (field_.is_prime_field()) return {field_, mul_prime(c_, o.c_, field_.p())};
  std::vector<Elem> out(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out[i + j] = field_.add(out[i + j], field_.mul(c_[i], o.c_[j]));
  }
  return {field_, std::move(out)};
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << format_human(p) << " {" << format_poly(p) << "} over GF(" << p.field().name() << ")";
}

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  const std::size_t db = b.deg();
  std::vector<Elem> rem = a.coeffs();
  std::vector<Elem> quot(rem.size() - db, 0);
  const std::vector<Elem>& bc = b.coeffs();
  const Elem inv_lead = f.inv(b.lead());
  if (f.is_prime_field()) {
    const std::uint64_t p = f.p();
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i] == 0) continue;
      const std::uint64_t c = std::uint64_t{rem[i]} * inv_lead % p;
      quot[i - db] = static_cast<Elem>(c);
      const std::uint64_t negc = p - c;
      Elem* out = rem.data() + (i - db);
      for (std::size_t j = 0; j < db; ++j)
        if (bc[j] != 0) out[j] = static_cast<Elem>((out[j] + negc * bc[j]) % p);
      rem[i] = 0;
    }
  } else {
    for (std::size_t i = rem.size(); i-- > db;) {
      if (rem[i] == 0) continue;
      const Elem c = f.mul(rem[i], inv_lead);
      quot[i - db] = c;
      const Elem negc = f.neg(c);
      for (std::size_t j = 0; j < db; ++j)
        if (bc[j] != 0) rem[i - db + j] = f.add(rem[i - db + j], f.mul(negc, bc[j]));
      rem[i] = 0;
    }
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divrem(a, b).second; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divrem(a, b).first; }

bool divides(const Polynomial& d, const Polynomial& a) { return (a % d).is_zero(); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a, b);
  if (a.is_zero() && b.is_zero()) throw Error(Errc::BothZero, "gcd(0, 0)");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial derivative(const Polynomial& p) {
  const Field& f = p.field();
  if (p.coeffs().size() <= 1) return Polynomial(f);
  std::vector<Elem> out(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i)
    out[i - 1] = f.mul(f.from_int(static_cast<long long>(i % f.p())), p.coeffs()[i]);
  return {f, std::move(out)};
}

Elem eval(const Polynomial& p, Elem a) {
  const Field& f = p.field();
  Elem acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = f.add(f.mul(acc, a), p.coeffs()[i]);
  return acc;
}

FieldElement eval(const Polynomial& p, const FieldElement& a) {
  if (a.field() == p.field()) return {p.field(), eval(p, a.value())};
  const Field& t = a.field();
  if (t.p() != p.field().p()) {
    throw Error(Errc::FieldMismatch, "GF(" + p.field().name() + ") polynomial at a GF(" + t.name() + ") point");
  }
  const Embedding emb(p.field(), t);
  Elem acc = 0;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = t.add(t.mul(acc, a.value()), emb(p.coeffs()[i]));
  return {t, acc};
}

Polynomial compose(const Polynomial& p, const Polynomial& inner) {
  require_same_field(p, inner);
  Polynomial acc(p.field());
  for (std::size_t i = p.coeffs().size(); i-- > 0;)
    acc = acc * inner + Polynomial::constant(p.field(), p.coeffs()[i]);
  return acc;
}

Polynomial pow(const Polynomial& base, std::uint64_t e) {
  Polynomial result = Polynomial::constant(base.field(), 1);
  Polynomial b = base;
  while (e != 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e != 0) b = b * b;
  }
  return result;
}

Polynomial mul_mod(const Polynomial& a, const Polynomial& b, const Polynomial& m) { return (a * b) % m; }

Polynomial pow_mod(const Polynomial& base, const BigInt& e, const Polynomial& m) {
  require_same_field(base, m);
  if (m.is_zero()) throw Error(Errc::ZeroModulus, "pow_mod with zero modulus");
  if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  if (m.deg() == 0) return Polynomial(m.field());
  Polynomial result = Polynomial::constant(m.field(), 1);
  if (e == 0) return result;
  const Polynomial b = base % m;
  const std::size_t top = boost::multiprecision::msb(e);
  for (std::size_t bit = top + 1; bit-- > 0;) {
    result = mul_mod(result, result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(bit))) result = mul_mod(result, b, m);
  }
  return result;
}

Polynomial x_pow_q_power_mod(std::uint64_t n, const Polynomial& m) {
  const BigInt q = m.field().q();
  Polynomial r = Polynomial::x(m.field()) % m;
  for (std::uint64_t i = 0; i < n; ++i) r = pow_mod(r, q, m);
  return r;
}

Polynomial map_coefficients(const Polynomial& p, const Embedding& emb) {
  if (!(p.field() == emb.source()))
    throw Error(Errc::FieldMismatch, "embedding source differs from coefficient field");
  std::vector<Elem> out;
  out.reserve(p.coeffs().size());
  for (Elem c : p.coeffs()) out.push_back(emb(c));
  return {emb.target(), std::move(out)};
}

}  // namespace qtk
