#pragma once

#include <stdexcept>
#include <string>

namespace bsh {

enum class ErrorCode {
    NotSplittable,
    InvalidSingleValue,
    NonIntegral,
    InfeasibleSeidel,
    MissingAllOnesRow,
    BoundInapplicable,
    NotUnbiasedCase,
    WrongParameters,
    NotDiagonalized,
    BudgetExceeded,
    MultiplicityMismatch,
    OddOrder,
    NotPrimePower,
    NotUfs,
    OddityViolation,
    AxiomFailure,
    UfsViolation,
    IrrationalEigenvalue,
    ParseError,
    UnknownDataset,
    PreconditionViolation,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

inline void require(bool cond, const std::string& detail) {
    if (!cond) fail(ErrorCode::PreconditionViolation, detail);
}

}  // namespace bsh
