#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bbsyz {

enum class ErrorCode {
    DimensionMismatch,
    EmptyOrderIdeal,
    NotDivisorClosed,
    DuplicateMonomial,
    BorderOrderMismatch,
    IndexOutOfRange,
    NotLinearInR,
    MissingBinding,
    SizeMismatch,
    InvariantViolation,
    TriviallyZeroCase,
    ClosedFormMismatch,
    NeedThreeVariables,
    VerificationFailed,
    IndexAbsent,
    InvalidOrderedProduct,
    SpineNotEmpty,
    NotARearrangement,
    NotPlanar,
    LemmaViolation,
    ZeroPivot,
    ParseError,
};

constexpr std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyOrderIdeal: return "EmptyOrderIdeal";
    case ErrorCode::NotDivisorClosed: return "NotDivisorClosed";
    case ErrorCode::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorCode::BorderOrderMismatch: return "BorderOrderMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotLinearInR: return "NotLinearInR";
    case ErrorCode::MissingBinding: return "MissingBinding";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::TriviallyZeroCase: return "TriviallyZeroCase";
    case ErrorCode::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorCode::NeedThreeVariables: return "NeedThreeVariables";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::IndexAbsent: return "IndexAbsent";
    case ErrorCode::InvalidOrderedProduct: return "InvalidOrderedProduct";
    case ErrorCode::SpineNotEmpty: return "SpineNotEmpty";
    case ErrorCode::NotARearrangement: return "NotARearrangement";
    case ErrorCode::NotPlanar: return "NotPlanar";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::ZeroPivot: return "ZeroPivot";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

// Errors that can only be raised when an internal cross-check disagrees.
constexpr bool is_self_check_failure(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvariantViolation:
    case ErrorCode::ClosedFormMismatch:
    case ErrorCode::VerificationFailed:
    case ErrorCode::SpineNotEmpty:
    case ErrorCode::LemmaViolation:
    case ErrorCode::ZeroPivot:
        return true;
    default:
        return false;
    }
}

class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), m_code(code)
    {
    }

    ErrorCode code() const noexcept { return m_code; }
    std::string_view name() const noexcept { return error_name(m_code); }

private:
    ErrorCode m_code;
};

// Input text could not be parsed. Line and column are 1-based; 0 means unknown.
class ParseError : public Error
{
public:
    ParseError(const std::string &detail, std::size_t line = 0, std::size_t column = 0)
        : Error(ErrorCode::ParseError, locate(detail, line, column)), m_line(line), m_column(column)
    {
    }

    std::size_t line() const noexcept { return m_line; }
    std::size_t column() const noexcept { return m_column; }

private:
    static std::string locate(const std::string &detail, std::size_t line, std::size_t column)
    {
        if (line == 0) {
            return detail;
        }
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + detail;
    }

    std::size_t m_line;
    std::size_t m_column;
};

} // namespace bbsyz
