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

#include "qtk/errors.hpp"

namespace qtk {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeBoundExceeded: return "SizeBoundExceeded";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::NoEmbedding: return "NoEmbedding";
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroModulus: return "ZeroModulus";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::DegenerateResult: return "DegenerateResult";
    case Errc::DegenerateExpression: return "DegenerateExpression";
    case Errc::OddDegree: return "OddDegree";
    case Errc::SingularTriple: return "SingularTriple";
    case Errc::Char2Degenerate: return "Char2Degenerate";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::Char2ClosedFormUnavailable: return "Char2ClosedFormUnavailable";
    case Errc::MissingDivisorValue: return "MissingDivisorValue";
    case Errc::ZeroSigma: return "ZeroSigma";
    case Errc::RequiresNGreaterThan1: return "RequiresNGreaterThan1";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::MismatchFound: return "MismatchFound";
    case Errc::DegreeNotMultipleOf3: return "DegreeNotMultipleOf3";
    case Errc::DegreeNotMultipleOf4: return "DegreeNotMultipleOf4";
    case Errc::DegreeNotMultipleOfP: return "DegreeNotMultipleOfP";
    case Errc::Char2Unsupported: return "Char2Unsupported";
    case Errc::NoSolution: return "NoSolution";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qtk
