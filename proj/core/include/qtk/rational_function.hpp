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

#ifndef QTK_RATIONAL_FUNCTION_HPP
#define QTK_RATIONAL_FUNCTION_HPP

#include "qtk/polynomial.hpp"

namespace qtk {

/// num/den in lowest terms with den monic.
class RationalFunction {
 public:
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial p);

  const Polynomial& num() const noexcept { return num_; }
  const Polynomial& den() const noexcept { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;

  bool operator==(const RationalFunction& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }

 private:
  Polynomial num_;
  Polynomial den_;
};

}  // namespace qtk

#endif  // QTK_RATIONAL_FUNCTION_HPP
