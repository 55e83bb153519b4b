#pragma once

#include <stdexcept>
#include <string>

namespace nchom {

// Machine-readable error codes; the CLI maps kind() to exit codes and JSON.
enum class ErrorKind {
    Parse,
    AmbientMismatch,
    GeneratorMismatch,
    InhomogeneousInput,
    DegreeMismatch,
    ZeroConstantTerm,
    NonUnitConstantTerm,
    TruncationMismatch,
    SizeGuardExceeded,
    NeedsFieldExtension,
    UnexpectedShape,
    WrongVeroneseRank,
    ConditionNotMet,
    IllegalParams,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    static const char* kind_name(ErrorKind k) {
        switch (k) {
            case ErrorKind::Parse: return "parse_error";
            case ErrorKind::AmbientMismatch: return "ambient_mismatch";
            case ErrorKind::GeneratorMismatch: return "generator_mismatch";
            case ErrorKind::InhomogeneousInput: return "inhomogeneous_input";
            case ErrorKind::DegreeMismatch: return "degree_mismatch";
            case ErrorKind::ZeroConstantTerm: return "zero_constant_term";
            case ErrorKind::NonUnitConstantTerm: return "non_unit_constant_term";
            case ErrorKind::TruncationMismatch: return "truncation_mismatch";
            case ErrorKind::SizeGuardExceeded: return "size_guard_exceeded";
            case ErrorKind::NeedsFieldExtension: return "needs_field_extension";
            case ErrorKind::UnexpectedShape: return "unexpected_shape";
            case ErrorKind::WrongVeroneseRank: return "wrong_veronese_rank";
            case ErrorKind::ConditionNotMet: return "condition_not_met";
            case ErrorKind::IllegalParams: return "illegal_params";
            case ErrorKind::Internal: return "internal_error";
        }
        return "unknown";
    }

private:
    ErrorKind kind_;
};

// Raised when a classification step needs a root that the base field lacks.
// Carries the minimal polynomial c0 + c1 x + c2 x^2 as a printable string so
// the caller can suggest a splitting field.
class NeedsFieldExtension : public Error {
public:
    explicit NeedsFieldExtension(std::string min_poly, std::string context)
        : Error(ErrorKind::NeedsFieldExtension,
                context + ": requires a root of " + min_poly + " not present in the base field"),
          min_poly_(std::move(min_poly)) {}
    const std::string& min_poly() const { return min_poly_; }

private:
    std::string min_poly_;
};

}  // namespace nchom
