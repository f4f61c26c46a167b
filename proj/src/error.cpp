#include "bsh/error.hpp"

namespace bsh {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSplittable: return "NotSplittable";
        case ErrorCode::InvalidSingleValue: return "InvalidSingleValue";
        case ErrorCode::NonIntegral: return "NonIntegral";
        case ErrorCode::InfeasibleSeidel: return "InfeasibleSeidel";
        case ErrorCode::MissingAllOnesRow: return "MissingAllOnesRow";
        case ErrorCode::BoundInapplicable: return "BoundInapplicable";
        case ErrorCode::NotUnbiasedCase: return "NotUnbiasedCase";
        case ErrorCode::WrongParameters: return "WrongParameters";
        case ErrorCode::NotDiagonalized: return "NotDiagonalized";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
        case ErrorCode::OddOrder: return "OddOrder";
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::NotUfs: return "NotUfs";
        case ErrorCode::OddityViolation: return "OddityViolation";
        case ErrorCode::AxiomFailure: return "AxiomFailure";
        case ErrorCode::UfsViolation: return "UfsViolation";
        case ErrorCode::IrrationalEigenvalue: return "IrrationalEigenvalue";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownDataset: return "UnknownDataset";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    }
    return "Error";
}

}  // namespace bsh
