#pragma once

#include <stdexcept>
#include <string>

namespace qes {

enum class ErrorKind {
    InvalidParams,
    DomainError,
    BaselineUnsolvable,
    WrongModel,
    DegenerateGrid,
    AsymmetricGrid,
    GridMismatch,
    DivisionByZeroMultiplicator,
    NonPositiveLambda,
    SigmaZero,
    EigensolveFailure,
    ComplexRootDetected,
    NotARoot,
    VerificationFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// 2 bad input, 3 numerical failure, 4 verification failure
int exit_code(ErrorKind kind);

}  // namespace qes
