#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Element has no multiplicative inverse in its ring.
class NotInvertible : public Error {
public:
    using Error::Error;
};

// Integer division has a remainder.
class NotDivisible : public Error {
public:
    using Error::Error;
};

// Operands belong to different coefficient rings.
class RingMismatch : public Error {
public:
    using Error::Error;
};

// Operation is not defined over the given ring.
class RingUnsupported : public Error {
public:
    using Error::Error;
};

// Operation would need coefficients beyond the stored precision.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

// Fewer input terms supplied than the formula touches.
class InsufficientInput : public Error {
public:
    using Error::Error;
};

// A result expected to be integral has a nontrivial denominator.
class IntegralityViolation : public Error {
public:
    using Error::Error;
};

// A documented precondition does not hold.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// Argument outside the operation's domain (wrong constant term, bad modulus, ...).
class DomainViolation : public Error {
public:
    using Error::Error;
};

// Text input (series files, payload strings, pipeline specs) failed to parse.
class ParseError : public Error {
public:
    using Error::Error;
};

// Verification suite name not recognized.
class UnknownSuite : public Error {
public:
    using Error::Error;
};

} // namespace hurwitz
