#pragma once

#include <stdexcept>
#include <string>

namespace fanolab {

enum class ErrorCode {
    NOT_2D,
    ORIGIN_NOT_INTERIOR,
    NONPRIMITIVE_VERTEX,
    NOT_CONVEX,
    NOT_FANO,
    NOT_MUTABLE,
    INVALID_DATA,
    INCONSISTENT,
    OUT_OF_SCOPE_BASKET,
    NON_INTEGRAL,
    UNSUPPORTED_CONE,
    UNRECOGNIZED_BLOCK,
    INVALID_ARGUMENT,
};

inline const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::NOT_2D: return "NOT_2D";
        case ErrorCode::ORIGIN_NOT_INTERIOR: return "ORIGIN_NOT_INTERIOR";
        case ErrorCode::NONPRIMITIVE_VERTEX: return "NONPRIMITIVE_VERTEX";
        case ErrorCode::NOT_CONVEX: return "NOT_CONVEX";
        case ErrorCode::NOT_FANO: return "NOT_FANO";
        case ErrorCode::NOT_MUTABLE: return "NOT_MUTABLE";
        case ErrorCode::INVALID_DATA: return "INVALID_DATA";
        case ErrorCode::INCONSISTENT: return "INCONSISTENT";
        case ErrorCode::OUT_OF_SCOPE_BASKET: return "OUT_OF_SCOPE_BASKET";
        case ErrorCode::NON_INTEGRAL: return "NON_INTEGRAL";
        case ErrorCode::UNSUPPORTED_CONE: return "UNSUPPORTED_CONE";
        case ErrorCode::UNRECOGNIZED_BLOCK: return "UNRECOGNIZED_BLOCK";
        case ErrorCode::INVALID_ARGUMENT: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace fanolab
