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

#include "qtk/rational_function.hpp"

namespace qtk {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  require_same_field(num_, den_);
  if (den_.is_zero()) throw Error(Errc::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(den_.field(), 1);
    return;
  }
  const Polynomial g = gcd(num_, den_);
  num_ = num_ / g;
  den_ = den_ / g;
  const Elem inv = den_.field().inv(den_.lead());
  num_ = num_.scale(inv);
  den_ = den_.scale(inv);
}

RationalFunction::RationalFunction(Polynomial p)
    : RationalFunction(p, Polynomial::constant(p.field(), 1)) {}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero rational function");
  return {num_ * o.den_, den_ * o.num_};
}

}  // namespace qtk
