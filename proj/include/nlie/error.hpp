#pragma once

#include <stdexcept>
#include <string>

namespace nlie {

// Base class for every failure the library can raise. Structural misuse
// (wrong shapes, bad input) throws; mathematical check failures never throw —
// they come back as Report values with witnesses.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& msg = "field tags do not match")
        : Error(msg) {}
};

// Carries the character offset of the first offending position.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "dimension mismatch")
        : Error(msg) {}
};

struct ArityMismatch : Error {
    explicit ArityMismatch(const std::string& msg = "arity mismatch") : Error(msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg = "index out of range")
        : Error(msg) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& msg = "shape mismatch") : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg = "matrix is singular")
        : Error(msg) {}
};

struct NotAnNLieAlgebra : Error {
    explicit NotAnNLieAlgebra(const std::string& msg) : Error(msg) {}
};

struct InvalidRepresentation : Error {
    explicit InvalidRepresentation(const std::string& msg) : Error(msg) {}
};

struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg = "cochain degree mismatch")
        : Error(msg) {}
};

struct NotNijenhuis : Error {
    explicit NotNijenhuis(const std::string& msg) : Error(msg) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& msg) : Error(msg) {}
};

struct MissingParam : Error {
    explicit MissingParam(const std::string& msg) : Error(msg) {}
};

struct FunctionalNotVanishingOnDerived : Error {
    explicit FunctionalNotVanishingOnDerived(const std::string& msg) : Error(msg) {}
};

struct NotADerivation : Error {
    explicit NotADerivation(const std::string& msg) : Error(msg) {}
};

struct DerivationsDoNotCommute : Error {
    explicit DerivationsDoNotCommute(const std::string& msg) : Error(msg) {}
};

struct FunctionalSymmetryViolated : Error {
    explicit FunctionalSymmetryViolated(const std::string& msg) : Error(msg) {}
};

struct NotAssociative : Error {
    explicit NotAssociative(const std::string& msg) : Error(msg) {}
};

struct NotNijenhuisAssoc : Error {
    explicit NotNijenhuisAssoc(const std::string& msg) : Error(msg) {}
};

struct CommutationViolated : Error {
    explicit CommutationViolated(const std::string& msg) : Error(msg) {}
};

} // namespace nlie
