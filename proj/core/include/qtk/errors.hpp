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

#ifndef QTK_ERRORS_HPP
#define QTK_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtk {

enum class Errc {
  NotPrime,
  SizeBoundExceeded,
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  NoEmbedding,
  BothZero,
  ZeroModulus,
  DegreeZero,
  BoundTooSmall,
  ZeroPolynomial,
  DegenerateResult,
  DegenerateExpression,
  OddDegree,
  SingularTriple,
  Char2Degenerate,
  NotCoprime,
  NotInvariant,
  Char2ClosedFormUnavailable,
  MissingDivisorValue,
  ZeroSigma,
  RequiresNGreaterThan1,
  IdentityViolated,
  MismatchFound,
  DegreeNotMultipleOf3,
  DegreeNotMultipleOf4,
  DegreeNotMultipleOfP,
  Char2Unsupported,
  NoSolution,
  InvalidArgument,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

/// All library failures are reported as qtk::Error carrying a stable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace qtk

#endif  // QTK_ERRORS_HPP
