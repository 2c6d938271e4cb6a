#include "hurwitz/series.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

#include "hurwitz/tables.hpp"

namespace hurwitz {

Series::Series(Ring ring, std::vector<Value> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw DomainViolation("series needs precision >= 1");
    for (const Value& c : coeffs_)
        if (c.ring() != ring_)
            throw RingMismatch("coefficient ring " + c.ring().tag() +
                               " does not match series ring " + ring_.tag());
}

Series Series::zero(const Ring& ring, std::size_t precision) {
    return Series(ring, std::vector<Value>(precision, Value::zero(ring)));
}

bool Series::operator==(const Series& other) const {
    return ring_ == other.ring_ && coeffs_ == other.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Series& s) {
    os << "[" << s.ring().tag() << " N=" << s.precision() << ":";
    for (std::size_t i = 0; i < s.precision(); ++i)
        os << (i ? "," : " ") << s[i].str();
    return os << "]";
}

std::string Delta::metric() const { return "2^-" + std::to_string(k_); }

bool metric_lt(const Delta& a, const Delta& b) {
    if (a.is_equal_at_precision())
        return !b.is_equal_at_precision();
    if (b.is_equal_at_precision())
        return false;
    return a.agreement() > b.agreement();
}

bool metric_le(const Delta& a, const Delta& b) { return !metric_lt(b, a); }

const Delta& metric_max(const Delta& a, const Delta& b) { return metric_lt(a, b) ? b : a; }

namespace {

void require_same_ring(const Series& a, const Series& b) {
    if (a.ring() != b.ring())
        throw RingMismatch("mixed rings " + a.ring().tag() + " and " + b.ring().tag());
}

} // namespace

Series convolve(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n_out = std::min(a.precision(), b.precision());
    std::vector<Value> c;
    c.reserve(n_out);
    for (std::size_t n = 0; n < n_out; ++n) {
        Value acc = Value::zero(a.ring());
        for (std::size_t h = 0; h <= n; ++h)
            acc += Value::from_integer(a.ring(), binomial(n, h)) * a[h] * b[n - h];
        c.push_back(std::move(acc));
    }
    return Series(a.ring(), std::move(c));
}

Series add(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n_out = std::min(a.precision(), b.precision());
    std::vector<Value> c;
    c.reserve(n_out);
    for (std::size_t n = 0; n < n_out; ++n)
        c.push_back(a[n] + b[n]);
    return Series(a.ring(), std::move(c));
}

Series sub(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n_out = std::min(a.precision(), b.precision());
    std::vector<Value> c;
    c.reserve(n_out);
    for (std::size_t n = 0; n < n_out; ++n)
        c.push_back(a[n] - b[n]);
    return Series(a.ring(), std::move(c));
}

Series negate(const Series& a) {
    std::vector<Value> c;
    c.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n)
        c.push_back(-a[n]);
    return Series(a.ring(), std::move(c));
}

Series identity_series(const Ring& ring, std::size_t precision) {
    return embed_scalar(Value::one(ring), precision);
}

Series embed_scalar(const Value& r, std::size_t precision) {
    std::vector<Value> c(precision, Value::zero(r.ring()));
    c[0] = r;
    return Series(r.ring(), std::move(c));
}

Series invert_series(const Series& a) {
    const Value a0_inv = ring_invert(a[0]); // NotInvertible when a_0 is no unit
    std::vector<Value> b;
    b.reserve(a.precision());
    b.push_back(a0_inv);
    for (std::size_t n = 1; n < a.precision(); ++n) {
        Value acc = Value::zero(a.ring());
        for (std::size_t h = 1; h <= n; ++h)
            acc += Value::from_integer(a.ring(), binomial(n, h)) * a[h] * b[n - h];
        b.push_back(-(a0_inv * acc));
    }
    return Series(a.ring(), std::move(b));
}

Series derivative(const Series& a) {
    if (a.precision() < 2)
        throw PrecisionExhausted("derivative of a length-1 series");
    std::vector<Value> c(a.coeffs().begin() + 1, a.coeffs().end());
    return Series(a.ring(), std::move(c));
}

Series prepend(const Series& a, const Value& r) {
    if (r.ring() != a.ring())
        throw RingMismatch("prepended value ring " + r.ring().tag() +
                           " does not match series ring " + a.ring().tag());
    std::vector<Value> c;
    c.reserve(a.precision() + 1);
    c.push_back(r);
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return Series(a.ring(), std::move(c));
}

Series prepend_ones(const Series& a, std::size_t k) {
    if (k < 1)
        throw DomainViolation("1-prepending needs k >= 1");
    std::vector<Value> c;
    c.reserve(a.precision() + k);
    c.insert(c.end(), k, Value::one(a.ring()));
    c.insert(c.end(), a.coeffs().begin(), a.coeffs().end());
    return Series(a.ring(), std::move(c));
}

Series truncate(const Series& a, std::size_t n) {
    if (n < 1 || n > a.precision())
        throw PrecisionExhausted("cannot truncate length-" + std::to_string(a.precision()) +
                                 " series to length " + std::to_string(n));
    std::vector<Value> c(a.coeffs().begin(), a.coeffs().begin() + static_cast<long>(n));
    return Series(a.ring(), std::move(c));
}

Delta delta(const Series& a, const Series& b) {
    require_same_ring(a, b);
    const std::size_t n_cmp = std::min(a.precision(), b.precision());
    for (std::size_t k = 0; k < n_cmp; ++k)
        if (a[k] != b[k])
            return Delta::disagreement(k);
    return Delta::equal_at_precision(n_cmp);
}

Series lift_series(const Series& a) {
    if (a.ring().kind() == RingKind::rationals)
        return a;
    std::vector<Value> c;
    c.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n)
        c.push_back(lift_to_rationals(a[n]));
    return Series(Ring::rationals(), std::move(c));
}

Series rational_to_integers(const Series& a) {
    if (a.ring().kind() != RingKind::rationals)
        throw RingUnsupported("rational_to_integers needs a rational series");
    std::vector<Value> c;
    c.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n) {
        const mpq_class& q = a[n].rational();
        if (q.get_den() != 1)
            throw IntegralityViolation("coefficient " + std::to_string(n) + " = " +
                                       a[n].str() + " is not an integer");
        c.push_back(Value(Ring::integers(), mpz_class(q.get_num())));
    }
    return Series(Ring::integers(), std::move(c));
}

} // namespace hurwitz
