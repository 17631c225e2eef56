#pragma once

#include <stdexcept>
#include <string>

namespace diffalg {

// Stable error codes; the CLI maps these onto exit statuses.
enum class Errc {
    // scalars / linear algebra
    ZeroVector,
    NonRationalEntry,
    // polynomial ring
    NotDivisible,
    DivisionByZero,
    BothZero,
    ZeroInput,
    UnknownVariable,
    RingMismatch,
    FieldMismatch,
    VariableNameReserved,
    // groebner
    EmptyInput,
    DegreeBudgetExceeded,
    // darboux
    ConstantInput,
    BadCofactorShape,
    NotARelation,
    IncompleteRoots,
    NotSquarefree,
    // differential ideals
    NotApplicable,
    NotDifferential,
    BadFactorization,
    ZeroField,
    NonIsolatedZeros,
    NoCandidate,
    UnsupportedShape,
    // parsing / ingestion
    SyntaxError,
    ImaginaryInRationalField,
    SpecFormat,
    // everything that should never happen
    Internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const { return code_; }
    const char* code_name() const { return errc_name(code_); }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::NonRationalEntry: return "NonRationalEntry";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::BothZero: return "BothZero";
        case Errc::ZeroInput: return "ZeroInput";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::VariableNameReserved: return "VariableNameReserved";
        case Errc::EmptyInput: return "EmptyInput";
        case Errc::DegreeBudgetExceeded: return "DegreeBudgetExceeded";
        case Errc::ConstantInput: return "ConstantInput";
        case Errc::BadCofactorShape: return "BadCofactorShape";
        case Errc::NotARelation: return "NotARelation";
        case Errc::IncompleteRoots: return "IncompleteRoots";
        case Errc::NotSquarefree: return "NotSquarefree";
        case Errc::NotApplicable: return "NotApplicable";
        case Errc::NotDifferential: return "NotDifferential";
        case Errc::BadFactorization: return "BadFactorization";
        case Errc::ZeroField: return "ZeroField";
        case Errc::NonIsolatedZeros: return "NonIsolatedZeros";
        case Errc::NoCandidate: return "NoCandidate";
        case Errc::UnsupportedShape: return "UnsupportedShape";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::ImaginaryInRationalField: return "ImaginaryInRationalField";
        case Errc::SpecFormat: return "SpecFormat";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace diffalg
