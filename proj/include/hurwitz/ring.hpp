#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hurwitz/errors.hpp"

namespace hurwitz {

enum class RingKind { integers, rationals, modular };

/// Descriptor of a commutative coefficient ring: Z, Q, or Z/mZ with m >= 2.
/// Two descriptors are equal iff kind and modulus match; mixed-ring
/// arithmetic is always rejected, never promoted.
class Ring {
public:
    static Ring integers();
    static Ring rationals();
    static Ring modular(mpz_class modulus); // DomainViolation if modulus < 2

    RingKind kind() const { return kind_; }
    const mpz_class& modulus() const; // modular rings only

    bool operator==(const Ring& other) const;
    bool operator!=(const Ring& other) const { return !(*this == other); }

    /// File-format tag: "Z", "Q", or "Zmod:<m>".
    std::string tag() const;
    static Ring from_tag(std::string_view tag); // ParseError

private:
    Ring(RingKind kind, mpz_class modulus) : kind_(kind), modulus_(std::move(modulus)) {}

    RingKind kind_;
    mpz_class modulus_; // 0 unless modular
};

/// Immutable ring element. Rationals are kept reduced with positive
/// denominator, modular residues canonical in [0, m); equality is
/// therefore structural.
class Value {
public:
    Value(Ring ring, mpz_class payload);      // integers / modular (reduced on entry)
    Value(Ring ring, mpq_class payload);      // rationals (canonicalized on entry)

    static Value zero(const Ring& ring);
    static Value one(const Ring& ring);
    /// Image of an integer under the canonical map Z -> R.
    static Value from_integer(const Ring& ring, const mpz_class& n);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const;

    const mpz_class& integer() const;  // integers / modular payload
    const mpq_class& rational() const; // rationals payload

    /// Payload in file-format form: decimal for Z and Z/mZ, "p/q" for Q
    /// with "/q" omitted when q = 1.
    std::string str() const;

    Value operator-() const;
    friend Value operator+(const Value& a, const Value& b);
    friend Value operator-(const Value& a, const Value& b);
    friend Value operator*(const Value& a, const Value& b);
    Value& operator+=(const Value& b) { return *this = *this + b; }
    Value& operator-=(const Value& b) { return *this = *this - b; }
    Value& operator*=(const Value& b) { return *this = *this * b; }

    bool operator==(const Value& other) const;
    bool operator!=(const Value& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const Value& v);

private:
    Ring ring_;
    std::variant<mpz_class, mpq_class> payload_;
};

/// Multiplicative inverse; NotInvertible when none exists. Modular inverses
/// go through the extended gcd (mpz_invert), not residue scanning.
Value ring_invert(const Value& x);

/// Exact solution y of n*y = x. Errors: NotDivisible over Z when n does not
/// divide x, NotInvertible over Z/mZ when gcd(n, m) != 1, DomainViolation
/// when n = 0.
Value exact_div_int(const Value& x, const mpz_class& n);

/// Explicit lift Z -> Q (identity on rationals, rejected for modular rings).
Value lift_to_rationals(const Value& x);

Value pow_value(Value base, std::size_t exp);

} // namespace hurwitz
