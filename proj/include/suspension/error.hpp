#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace suspension {

enum class ErrorCode {
    NotNegativeDefinite,
    NonIntegralSolution,
    NotATree,
    NotContractible,
    InvalidInput,
    InvalidExpansion,
    InvalidNewtonPairs,
    NotCoprime,
    RequiresSGe2,
    FewerThanTwoRupture,
    NotRationalHomologySphereBase,
    UnknownVertex,
    ParseError,
    DuplicateVertex,
    DanglingEdge,
    Internal,
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::NotContractible: return "NotContractible";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::InvalidExpansion: return "InvalidExpansion";
        case ErrorCode::InvalidNewtonPairs: return "InvalidNewtonPairs";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::RequiresSGe2: return "RequiresSGe2";
        case ErrorCode::FewerThanTwoRupture: return "FewerThanTwoRupture";
        case ErrorCode::NotRationalHomologySphereBase: return "NotRationalHomologySphereBase";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::DanglingEdge: return "DanglingEdge";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace suspension
