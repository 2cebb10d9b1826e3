#include "qes/errors.hpp"

namespace qes {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::BaselineUnsolvable: return "BaselineUnsolvable";
        case ErrorKind::WrongModel: return "WrongModel";
        case ErrorKind::DegenerateGrid: return "DegenerateGrid";
        case ErrorKind::AsymmetricGrid: return "AsymmetricGrid";
        case ErrorKind::GridMismatch: return "GridMismatch";
        case ErrorKind::DivisionByZeroMultiplicator: return "DivisionByZeroMultiplicator";
        case ErrorKind::NonPositiveLambda: return "NonPositiveLambda";
        case ErrorKind::SigmaZero: return "SigmaZero";
        case ErrorKind::EigensolveFailure: return "EigensolveFailure";
        case ErrorKind::ComplexRootDetected: return "ComplexRootDetected";
        case ErrorKind::NotARoot: return "NotARoot";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParams:
        case ErrorKind::DomainError:
        case ErrorKind::BaselineUnsolvable:
        case ErrorKind::WrongModel:
        case ErrorKind::DegenerateGrid:
        case ErrorKind::AsymmetricGrid:
        case ErrorKind::GridMismatch:
            return 2;
        case ErrorKind::VerificationFailed:
            return 4;
        default:
            return 3;
    }
}

}  // namespace qes
