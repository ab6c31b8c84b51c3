#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zetamod {

enum class ErrorKind {
    ZeroConstantTerm,
    BadConstantTerm,
    NonIntegral,
    InsufficientData,
    HorizonExceeded,
    NonRealizable,
    BaseMismatch,
    NotPrimePower,
    NotPrime,
    DegreeTooLarge,
    BadParameters,
    BudgetExceeded,
    FunctionalEquationViolated,
    PredictionMismatch,
    InvalidPermutation,
    NotCommuting,
    NotEquivariant,
    NotSurjective,
    NotSubgroup,
    EmptyRange,
    ParseError,
};

inline std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::HorizonExceeded: return "HorizonExceeded";
    case ErrorKind::NonRealizable: return "NonRealizable";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::FunctionalEquationViolated: return "FunctionalEquationViolated";
    case ErrorKind::PredictionMismatch: return "PredictionMismatch";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::NotCommuting: return "NotCommuting";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace zetamod
