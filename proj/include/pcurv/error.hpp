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

#ifndef PCURV_ERROR_HPP
#define PCURV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pcurv {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    NotPrime,
    InvalidArgument,
    ModuliNotCoprime,
    InsufficientModuli,
    NoSolutionWithinBound,
    NotAGenerator,
    DimensionMismatch,
    NotSquare,
    NotMonic,
    ZeroLeadingCoefficient,
    NotInXp,
    LeadingCoeffVanishes,
    PoleAtPoint,
    CharTooSmall,
    EpsilonOutOfRange,
    SelectionFailed,
    SyntaxError,
    ZeroOperator,
};

const char* error_code_name(ErrorCode code) noexcept;

// All library failures are reported through this exception; the C API maps
// the code onto a status value.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& what);

}  // namespace pcurv

#endif
