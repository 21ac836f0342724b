/*
   Copyright 2026 The critfact authors

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

#ifndef CRITFACT_ERRORS_HPP
#define CRITFACT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace critfact {

enum class ErrorCode {
    DivisionByZero,
    ContextMismatch,
    NotApplicable,
    NotDivisible,
    SmallCharacteristic,
    SmallCharacteristicUnsupported,
    Inseparable,
    BadCenter,
    LeadingCoeffNotUnit,
    DimensionMismatch,
    FieldTooSmall,
    TowerTooDeep,
    RecombinationTooLarge,
    ExponentTooLarge,
    SyntaxError,
    BadFieldSpec,
    Unsupported,
    Internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::SmallCharacteristic: return "SmallCharacteristic";
        case ErrorCode::SmallCharacteristicUnsupported: return "SmallCharacteristicUnsupported";
        case ErrorCode::Inseparable: return "Inseparable";
        case ErrorCode::BadCenter: return "BadCenter";
        case ErrorCode::LeadingCoeffNotUnit: return "LeadingCoeffNotUnit";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::TowerTooDeep: return "TowerTooDeep";
        case ErrorCode::RecombinationTooLarge: return "RecombinationTooLarge";
        case ErrorCode::ExponentTooLarge: return "ExponentTooLarge";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::BadFieldSpec: return "BadFieldSpec";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code), detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

// Invariant check for conditions that indicate a bug rather than bad input.
inline void require_internal(bool cond, const char* what) {
    if (!cond) throw Error(ErrorCode::Internal, what);
}

}  // namespace critfact

#endif
