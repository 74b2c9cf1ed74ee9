/**************************************************************************
 * Copyright 2026 The linset Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include "linset/error.hpp"

namespace linset {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::MixedContexts: return "MixedContexts";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::InvalidSubfield: return "InvalidSubfield";
    case ErrorKind::NonDivisorDegrees: return "NonDivisorDegrees";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::DegenerateTraceForm: return "DegenerateTraceForm";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::DependentSamplePoints: return "DependentSamplePoints";
    case ErrorKind::SingularMooreMatrix: return "SingularMooreMatrix";
    case ErrorKind::NonDivisor: return "NonDivisor";
    case ErrorKind::BadDivisor: return "BadDivisor";
    case ErrorKind::SingularA: return "SingularA";
    case ErrorKind::NoFreePoint: return "NoFreePoint";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::DegenerateF: return "DegenerateF";
    case ErrorKind::NotRPartiallyScattered: return "NotRPartiallyScattered";
    case ErrorKind::CoefficientsNotInSubfield: return "CoefficientsNotInSubfield";
    case ErrorKind::NotComplementary: return "NotComplementary";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace linset
