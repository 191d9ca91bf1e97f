#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charzeros {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or class-data text.
class ParseError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : ParseError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public ParseError {
public:
    UnknownVariable(char name, std::size_t position)
        : ParseError(std::string("unknown variable '") + name + "' at position " + std::to_string(position)),
          name_(name), position_(position) {}

    char name() const noexcept { return name_; }
    std::size_t position() const noexcept { return position_; }

private:
    char name_;
    std::size_t position_;
};

/// A well-formed request that the mathematics rejects (bad rank, failed hypothesis, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

#define CHARZEROS_DOMAIN_ERROR(Name)        \
    class Name : public DomainError {       \
    public:                                 \
        using DomainError::DomainError;     \
    }

CHARZEROS_DOMAIN_ERROR(ZeroPolynomial);
CHARZEROS_DOMAIN_ERROR(DegenerateDegree);
CHARZEROS_DOMAIN_ERROR(InvalidRank);
CHARZEROS_DOMAIN_ERROR(IndexOutOfRange);
CHARZEROS_DOMAIN_ERROR(ZeroWeight);
CHARZEROS_DOMAIN_ERROR(ProductNotLarger);
CHARZEROS_DOMAIN_ERROR(PositiveDimensional);
CHARZEROS_DOMAIN_ERROR(NotSymmetric);
CHARZEROS_DOMAIN_ERROR(HypothesisViolated);
CHARZEROS_DOMAIN_ERROR(NotClassifiable);
CHARZEROS_DOMAIN_ERROR(NotAnSCharacter);
CHARZEROS_DOMAIN_ERROR(NotASquare);
CHARZEROS_DOMAIN_ERROR(IsTrivial);
CHARZEROS_DOMAIN_ERROR(InconsistentClassData);
CHARZEROS_DOMAIN_ERROR(NoZeros);

// These three can only fire on an internal bug: the underlying theorems
// guarantee they never trigger on valid input.
CHARZEROS_DOMAIN_ERROR(NonIntegralDimension);
CHARZEROS_DOMAIN_ERROR(InexactDivision);
CHARZEROS_DOMAIN_ERROR(NonCyclotomicRemainder);

#undef CHARZEROS_DOMAIN_ERROR

}  // namespace charzeros
