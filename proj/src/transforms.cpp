#include "hurwitz/transforms.hpp"

#include <string>
#include <utility>

namespace hurwitz {

Series alternating_sign(const Series& a) {
    std::vector<Value> b;
    b.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n)
        b.push_back(n % 2 ? -a[n] : a[n]);
    return Series(a.ring(), std::move(b));
}

Series binomial_interpolated(const Series& a, const Value& y) {
    if (y.ring() != a.ring())
        throw RingMismatch("parameter ring " + y.ring().tag() +
                           " does not match series ring " + a.ring().tag());
    std::vector<Value> ypow;
    ypow.reserve(a.precision());
    ypow.push_back(Value::one(a.ring()));
    for (std::size_t n = 1; n < a.precision(); ++n)
        ypow.push_back(ypow.back() * y);

    std::vector<Value> direct;
    direct.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n) {
        Value acc = Value::zero(a.ring());
        for (std::size_t h = 0; h <= n; ++h)
            acc += Value::from_integer(a.ring(), binomial(n, h)) * ypow[n - h] * a[h];
        direct.push_back(std::move(acc));
    }
    Series result(a.ring(), std::move(direct));

    const Series via_convolution = convolve(Series(a.ring(), std::move(ypow)), a);
    if (result != via_convolution)
        throw Error("binomial interpolated transform: direct sum and convolution routes disagree");
    return result;
}

ZigzagTable zigzag_numbers(std::size_t n) {
    if (n < 1)
        throw DomainViolation("zigzag table needs n >= 1");
    ZigzagTable t{entringer_table(n - 1), {}};
    t.beta.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        t.beta.push_back(t.entringer.at(i, i));
    return t;
}

Series beta_series(const Ring& ring, std::size_t n) {
    ZigzagTable t = zigzag_numbers(n);
    std::vector<Value> c;
    c.reserve(n);
    for (const mpz_class& b : t.beta)
        c.push_back(Value::from_integer(ring, b));
    return Series(ring, std::move(c));
}

Series boustrophedon(const Series& a) {
    return convolve(beta_series(a.ring(), a.precision()), a);
}

Series stirling_transform(const Series& a) {
    const TriangleTable s2 = stirling2_table(a.precision() - 1);
    std::vector<Value> b;
    b.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n) {
        Value acc = Value::zero(a.ring());
        for (std::size_t h = 0; h <= n; ++h)
            acc += Value::from_integer(a.ring(), s2.at(n, h)) * a[h];
        b.push_back(std::move(acc));
    }
    return Series(a.ring(), std::move(b));
}

Series stirling_inverse(const Series& a) {
    const TriangleTable s1 = stirling1_table(a.precision() - 1);
    std::vector<Value> b;
    b.reserve(a.precision());
    for (std::size_t n = 0; n < a.precision(); ++n) {
        Value acc = Value::zero(a.ring());
        for (std::size_t h = 0; h <= n; ++h) {
            Value term = Value::from_integer(a.ring(), s1.at(n, h)) * a[h];
            acc += ((n - h) % 2) ? -term : term;
        }
        b.push_back(std::move(acc));
    }
    return Series(a.ring(), std::move(b));
}

namespace {

void require_rationals(const Series& a, const char* op) {
    if (a.ring().kind() != RingKind::rationals)
        throw RingUnsupported(std::string(op) + " needs rational coefficients, got ring " +
                              a.ring().tag());
}

} // namespace

Series series_exp(const Series& a) {
    require_rationals(a, "series exp");
    if (!a[0].is_zero())
        throw DomainViolation("series exp needs constant term 0, got " + a[0].str());
    std::vector<Value> b;
    b.reserve(a.precision());
    b.push_back(Value::one(a.ring()));
    for (std::size_t n = 0; n + 1 < a.precision(); ++n) {
        Value acc = Value::zero(a.ring());
        for (std::size_t k = 0; k <= n; ++k)
            acc += Value::from_integer(a.ring(), binomial(n, k)) * a[k + 1] * b[n - k];
        b.push_back(std::move(acc));
    }
    return Series(a.ring(), std::move(b));
}

Series series_log(const Series& a) {
    require_rationals(a, "series log");
    if (!a[0].is_one())
        throw DomainViolation("series log needs constant term 1, got " + a[0].str());
    std::vector<Value> h;
    h.reserve(a.precision());
    h.push_back(Value::zero(a.ring()));
    // Solve a_{n+1} = sum_{k=0}^{n} C(n,k) h_{k+1} a_{n-k} for h_{n+1}.
    for (std::size_t n = 0; n + 1 < a.precision(); ++n) {
        Value acc = a[n + 1];
        for (std::size_t k = 0; k + 1 <= n; ++k)
            acc -= Value::from_integer(a.ring(), binomial(n, k)) * h[k + 1] * a[n - k];
        h.push_back(std::move(acc));
    }
    return Series(a.ring(), std::move(h));
}

Parity parity_check(const Series& a) {
    bool even = true, odd = true;
    for (std::size_t n = 0; n < a.precision(); ++n) {
        if (a[n].is_zero())
            continue;
        if (n % 2)
            even = false;
        else
            odd = false;
    }
    if (even)
        return Parity::even;
    if (odd)
        return Parity::odd;
    return Parity::neither;
}

} // namespace hurwitz
