/*
   Copyright 2026 The pcurv Authors

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

#include "pcurv/error.hpp"

namespace pcurv {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ModuliNotCoprime: return "ModuliNotCoprime";
        case ErrorCode::InsufficientModuli: return "InsufficientModuli";
        case ErrorCode::NoSolutionWithinBound: return "NoSolutionWithinBound";
        case ErrorCode::NotAGenerator: return "NotAGenerator";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
        case ErrorCode::NotInXp: return "NotInXp";
        case ErrorCode::LeadingCoeffVanishes: return "LeadingCoeffVanishes";
        case ErrorCode::PoleAtPoint: return "PoleAtPoint";
        case ErrorCode::CharTooSmall: return "CharTooSmall";
        case ErrorCode::EpsilonOutOfRange: return "EpsilonOutOfRange";
        case ErrorCode::SelectionFailed: return "SelectionFailed";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::ZeroOperator: return "ZeroOperator";
    }
    return "Unknown";
}

void raise(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace pcurv
