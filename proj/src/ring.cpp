#include "hurwitz/ring.hpp"

#include <ostream>
#include <utility>

namespace hurwitz {

namespace {

mpz_class reduce_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()); // result in [0, m)
    return r;
}

} // namespace

Ring Ring::integers() { return Ring(RingKind::integers, 0); }

Ring Ring::rationals() { return Ring(RingKind::rationals, 0); }

Ring Ring::modular(mpz_class modulus) {
    if (modulus < 2)
        throw DomainViolation("modular ring needs modulus >= 2, got " + modulus.get_str());
    return Ring(RingKind::modular, std::move(modulus));
}

const mpz_class& Ring::modulus() const {
    if (kind_ != RingKind::modular)
        throw DomainViolation("modulus() called on a non-modular ring");
    return modulus_;
}

bool Ring::operator==(const Ring& other) const {
    return kind_ == other.kind_ && modulus_ == other.modulus_;
}

std::string Ring::tag() const {
    switch (kind_) {
    case RingKind::integers: return "Z";
    case RingKind::rationals: return "Q";
    case RingKind::modular: return "Zmod:" + modulus_.get_str();
    }
    throw Error("corrupt ring kind");
}

Ring Ring::from_tag(std::string_view tag) {
    if (tag == "Z")
        return integers();
    if (tag == "Q")
        return rationals();
    constexpr std::string_view prefix = "Zmod:";
    if (tag.substr(0, prefix.size()) == prefix) {
        const std::string digits(tag.substr(prefix.size()));
        mpz_class m;
        if (digits.empty() || mpz_set_str(m.get_mpz_t(), digits.c_str(), 10) != 0)
            throw ParseError("bad modulus in ring tag '" + std::string(tag) + "'");
        if (m < 2)
            throw ParseError("modulus must be >= 2 in ring tag '" + std::string(tag) + "'");
        return modular(m);
    }
    throw ParseError("unknown ring tag '" + std::string(tag) + "'");
}

Value::Value(Ring ring, mpz_class payload) : ring_(std::move(ring)), payload_(mpz_class()) {
    switch (ring_.kind()) {
    case RingKind::integers:
        payload_ = std::move(payload);
        break;
    case RingKind::modular:
        payload_ = reduce_mod(payload, ring_.modulus());
        break;
    case RingKind::rationals:
        payload_ = mpq_class(payload);
        break;
    }
}

Value::Value(Ring ring, mpq_class payload) : ring_(std::move(ring)), payload_(mpz_class()) {
    if (ring_.kind() != RingKind::rationals)
        throw RingMismatch("rational payload supplied for ring " + ring_.tag());
    payload.canonicalize();
    payload_ = std::move(payload);
}

Value Value::zero(const Ring& ring) { return from_integer(ring, 0); }

Value Value::one(const Ring& ring) { return from_integer(ring, 1); }

Value Value::from_integer(const Ring& ring, const mpz_class& n) {
    if (ring.kind() == RingKind::rationals)
        return Value(ring, mpq_class(n));
    return Value(ring, n);
}

bool Value::is_zero() const {
    if (ring_.kind() == RingKind::rationals)
        return sgn(std::get<mpq_class>(payload_)) == 0;
    return sgn(std::get<mpz_class>(payload_)) == 0;
}

bool Value::is_one() const {
    if (ring_.kind() == RingKind::rationals)
        return std::get<mpq_class>(payload_) == 1;
    return std::get<mpz_class>(payload_) == 1;
}

const mpz_class& Value::integer() const {
    if (ring_.kind() == RingKind::rationals)
        throw DomainViolation("integer() called on a rational value");
    return std::get<mpz_class>(payload_);
}

const mpq_class& Value::rational() const {
    if (ring_.kind() != RingKind::rationals)
        throw DomainViolation("rational() called on a non-rational value");
    return std::get<mpq_class>(payload_);
}

std::string Value::str() const {
    if (ring_.kind() == RingKind::rationals) {
        const mpq_class& q = std::get<mpq_class>(payload_);
        if (q.get_den() == 1)
            return q.get_num().get_str();
        return q.get_num().get_str() + "/" + q.get_den().get_str();
    }
    return std::get<mpz_class>(payload_).get_str();
}

namespace {

void require_same_ring(const Value& a, const Value& b) {
    if (a.ring() != b.ring())
        throw RingMismatch("mixed rings " + a.ring().tag() + " and " + b.ring().tag());
}

} // namespace

Value Value::operator-() const {
    switch (ring_.kind()) {
    case RingKind::integers:
        return Value(ring_, mpz_class(-std::get<mpz_class>(payload_)));
    case RingKind::rationals:
        return Value(ring_, mpq_class(-std::get<mpq_class>(payload_)));
    case RingKind::modular:
        return Value(ring_, mpz_class(-std::get<mpz_class>(payload_)));
    }
    throw Error("corrupt ring kind");
}

Value operator+(const Value& a, const Value& b) {
    require_same_ring(a, b);
    if (a.ring().kind() == RingKind::rationals)
        return Value(a.ring(), mpq_class(a.rational() + b.rational()));
    return Value(a.ring(), mpz_class(a.integer() + b.integer()));
}

Value operator-(const Value& a, const Value& b) {
    require_same_ring(a, b);
    if (a.ring().kind() == RingKind::rationals)
        return Value(a.ring(), mpq_class(a.rational() - b.rational()));
    return Value(a.ring(), mpz_class(a.integer() - b.integer()));
}

Value operator*(const Value& a, const Value& b) {
    require_same_ring(a, b);
    if (a.ring().kind() == RingKind::rationals)
        return Value(a.ring(), mpq_class(a.rational() * b.rational()));
    return Value(a.ring(), mpz_class(a.integer() * b.integer()));
}

bool Value::operator==(const Value& other) const {
    if (ring_ != other.ring_)
        return false;
    if (ring_.kind() == RingKind::rationals)
        return std::get<mpq_class>(payload_) == std::get<mpq_class>(other.payload_);
    return std::get<mpz_class>(payload_) == std::get<mpz_class>(other.payload_);
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

Value ring_invert(const Value& x) {
    switch (x.ring().kind()) {
    case RingKind::integers: {
        const mpz_class& n = x.integer();
        if (n == 1 || n == -1)
            return x;
        throw NotInvertible(n.get_str() + " is not a unit of Z");
    }
    case RingKind::rationals: {
        if (x.is_zero())
            throw NotInvertible("0 has no inverse in Q");
        const mpq_class& q = x.rational();
        return Value(x.ring(), mpq_class(q.get_den(), q.get_num()));
    }
    case RingKind::modular: {
        mpz_class inv;
        const int ok = mpz_invert(inv.get_mpz_t(), x.integer().get_mpz_t(),
                                  x.ring().modulus().get_mpz_t());
        if (!ok)
            throw NotInvertible(x.integer().get_str() + " is not invertible mod " +
                                x.ring().modulus().get_str());
        return Value(x.ring(), inv);
    }
    }
    throw Error("corrupt ring kind");
}

Value exact_div_int(const Value& x, const mpz_class& n) {
    if (n == 0)
        throw DomainViolation("exact division by 0");
    switch (x.ring().kind()) {
    case RingKind::integers: {
        if (!mpz_divisible_p(x.integer().get_mpz_t(), n.get_mpz_t()))
            throw NotDivisible(n.get_str() + " does not divide " + x.integer().get_str());
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), x.integer().get_mpz_t(), n.get_mpz_t());
        return Value(x.ring(), q);
    }
    case RingKind::rationals:
        return Value(x.ring(), mpq_class(x.rational() / mpq_class(n)));
    case RingKind::modular:
        return x * ring_invert(Value::from_integer(x.ring(), n));
    }
    throw Error("corrupt ring kind");
}

Value lift_to_rationals(const Value& x) {
    switch (x.ring().kind()) {
    case RingKind::integers:
        return Value(Ring::rationals(), mpq_class(x.integer()));
    case RingKind::rationals:
        return x;
    case RingKind::modular:
        throw RingUnsupported("cannot lift a modular residue to Q");
    }
    throw Error("corrupt ring kind");
}

Value pow_value(Value base, std::size_t exp) {
    Value acc = Value::one(base.ring());
    while (exp > 0) {
        if (exp & 1u)
            acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

} // namespace hurwitz
