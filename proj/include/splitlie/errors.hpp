#pragma once

#include <stdexcept>
#include <string>

namespace splitlie {

enum class ErrorKind {
    Parse,
    DimensionMismatch,
    InvalidInput,
    JacobiFailure,
    ModuleAxiomFailure,
    NotSplitOverField,
    NonCommuting,
    CartanNotAbelian,
    NotSelfCentralizing,
    NotWeightModule,
    SymmetryViolation,
    MismatchedAlgebra,
    PreconditionFailed,
    ValidationFailed,
};

const char* error_kind_name(ErrorKind kind);

/// All library failures throw this; `kind` drives the CLI exit-code mapping
/// (every kind here is an input/precondition problem, never a theorem failure).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace splitlie
