#include "hurwitz/dynamics.hpp"

#include <string>
#include <utility>

#include "hurwitz/bell.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/transforms.hpp"

namespace hurwitz {

namespace {

const Ring& require_z_or_q(const Ring& ring, const char* op) {
    if (ring.kind() == RingKind::modular)
        throw RingUnsupported(std::string(op) + " needs Z or Q, got ring " + ring.tag());
    return ring;
}

// C(1/2, k) as an exact rational, by the falling product.
Value half_binomial(const Ring& q, std::size_t k) {
    mpq_class acc = 1;
    for (std::size_t j = 0; j < k; ++j)
        acc *= mpq_class(1, 2) - mpq_class(j);
    acc /= mpq_class(factorial(k));
    return Value(q, acc);
}

std::vector<Value> lift_all(const std::vector<Value>& values) {
    std::vector<Value> out;
    out.reserve(values.size());
    for (const Value& v : values)
        out.push_back(lift_to_rationals(v));
    return out;
}

std::vector<Value> odd_coefficients(const Series& a) {
    std::vector<Value> odds;
    for (std::size_t i = 1; i < a.precision(); i += 2)
        odds.push_back(a[i]);
    return odds;
}

// Core of even_from_odd over Q. odds = (a_1, a_3, ...).
Series complete_from_odds_rational(const Ring& q, const std::vector<Value>& odds,
                                   std::size_t precision) {
    std::vector<Value> out(precision, Value::zero(q));
    out[0] = Value::one(q);
    for (std::size_t i = 1; i < precision; i += 2)
        out[i] = odds[(i - 1) / 2];
    if (precision < 3)
        return Series(q, std::move(out));

    const std::size_t n_half = (precision - 1) / 2; // largest n with 2n < precision
    std::vector<Value> x;
    x.reserve(n_half);
    for (std::size_t i = 1; i <= n_half; ++i)
        x.push_back(exact_div_int(odds[i - 1], factorial(2 * i - 1)));
    const BellTable table(BellInput(q, std::move(x)), 2 * n_half, 2 * n_half);

    for (std::size_t n = 1; n <= n_half; ++n) {
        Value acc = Value::zero(q);
        for (std::size_t k = 1; k <= n; ++k)
            acc += half_binomial(q, k) * table.at(n + k, 2 * k);
        out[2 * n] = Value::from_integer(q, factorial(2 * n)) * acc;
    }
    return Series(q, std::move(out));
}

// Core of odd_from_even over Q. evens = (a_2, a_4, ...), a_0 = 1 implicit.
Series complete_from_evens_rational(const Ring& q, const std::vector<Value>& evens,
                                    const Value& sqrt_a2, std::size_t precision) {
    const Value& a2 = evens[0];
    if (a2.is_zero())
        throw PreconditionViolation("a_2 = 0 is not invertible");
    if (sqrt_a2 * sqrt_a2 != a2)
        throw PreconditionViolation("sqrt_a2^2 = " + (sqrt_a2 * sqrt_a2).str() +
                                    " differs from a_2 = " + a2.str());
    const Value a2_inv = ring_invert(a2);

    auto even_at = [&](std::size_t idx) -> Value { // idx even, 0 <= idx <= 2M
        return idx == 0 ? Value::one(q) : evens[idx / 2 - 1];
    };

    std::vector<Value> out(precision, Value::zero(q));
    out[0] = Value::one(q);
    for (std::size_t i = 2; i < precision; i += 2)
        out[i] = even_at(i);
    if (precision < 2)
        return Series(q, std::move(out));

    const std::size_t n_half = (precision - 2) / 2; // largest n with 2n+1 < precision

    // x_i carries the even self-convolution (P(t))^2 - 1 with the a_2 t^2
    // factor pulled out: x_i = (1/(2i+2)!) sum_k C(2i+2,2k) a_{2k} a_{2(i-k+1)}.
    std::vector<Value> x;
    x.reserve(n_half);
    for (std::size_t i = 1; i <= n_half; ++i) {
        Value sum = Value::zero(q);
        for (std::size_t k = 0; k <= i + 1; ++k)
            sum += Value::from_integer(q, binomial(2 * i + 2, 2 * k)) * even_at(2 * k) *
                   even_at(2 * (i - k + 1));
        x.push_back(exact_div_int(sum, factorial(2 * i + 2)));
    }

    out[1] = sqrt_a2;
    if (n_half >= 1) {
        const BellTable table(BellInput(q, std::move(x)), n_half, n_half);
        for (std::size_t n = 1; n <= n_half; ++n) {
            Value acc = Value::zero(q);
            Value a2_pow = a2_inv; // a_2^{-k}, starting at k = 1 (B_{n,0} = 0)
            for (std::size_t k = 1; k <= n; ++k) {
                acc += a2_pow * half_binomial(q, k) * table.at(n, k);
                a2_pow *= a2_inv;
            }
            out[2 * n + 1] = Value::from_integer(q, factorial(2 * n + 1)) * sqrt_a2 * acc;
        }
    }
    return Series(q, std::move(out));
}

} // namespace

bool is_in_br(const Series& a) {
    if (!a[0].is_one())
        return false;
    return convolve(alternating_sign(a), a) == identity_series(a.ring(), a.precision());
}

BrElement::BrElement(Series series) : series_(std::move(series)) {
    if (!is_in_br(series_))
        throw PreconditionViolation("series is not in B_R at precision " +
                                    std::to_string(series_.precision()));
}

Series even_from_odd(const Ring& ring, const std::vector<Value>& odds, std::size_t precision) {
    require_z_or_q(ring, "even-from-odd reconstruction");
    if (precision < 1)
        throw DomainViolation("precision must be >= 1");
    const std::size_t needed = precision / 2;
    if (odds.size() < needed)
        throw InsufficientInput("precision " + std::to_string(precision) + " needs " +
                                std::to_string(needed) + " odd terms, got " +
                                std::to_string(odds.size()));
    for (const Value& v : odds)
        if (v.ring() != ring)
            throw RingMismatch("odd term ring does not match " + ring.tag());

    const Series over_q =
        complete_from_odds_rational(Ring::rationals(), lift_all(odds), precision);
    if (ring.kind() == RingKind::integers)
        return rational_to_integers(over_q); // IntegralityViolation = implementation fault
    return over_q;
}

Series odd_from_even(const Ring& ring, const std::vector<Value>& evens, const Value& sqrt_a2,
                     std::size_t precision) {
    require_z_or_q(ring, "odd-from-even reconstruction");
    if (precision < 1)
        throw DomainViolation("precision must be >= 1");
    if (evens.empty())
        throw InsufficientInput("a_2 is required");
    const std::size_t needed = precision / 2; // a_{2n+1} touches a_{2n+2}
    if (evens.size() < needed)
        throw InsufficientInput("precision " + std::to_string(precision) + " needs " +
                                std::to_string(needed) + " even terms, got " +
                                std::to_string(evens.size()));
    for (const Value& v : evens)
        if (v.ring() != ring)
            throw RingMismatch("even term ring does not match " + ring.tag());
    if (sqrt_a2.ring() != ring)
        throw RingMismatch("sqrt_a2 ring does not match " + ring.tag());
    if (ring.kind() == RingKind::integers) {
        const mpz_class& a2 = evens[0].integer();
        if (a2 != 1 && a2 != -1)
            throw PreconditionViolation("a_2 = " + a2.get_str() + " is not a unit of Z");
    }

    const Series over_q = complete_from_evens_rational(
        Ring::rationals(), lift_all(evens), lift_to_rationals(sqrt_a2), precision);
    if (ring.kind() == RingKind::integers)
        return rational_to_integers(over_q); // odd terms need not be integral
    return over_q;
}

Series autoconvolution(const Series& a) {
    std::vector<Value> b(a.coeffs());
    for (std::size_t m = 2; m < a.precision(); m += 2) {
        Value sum = Value::zero(a.ring());
        for (std::size_t h = 1; h < m; ++h) {
            Value term = Value::from_integer(a.ring(), binomial(m, h)) * a[h] * a[m - h];
            sum += (h % 2) ? -term : term;
        }
        b[m] = exact_div_int(-sum, 2); // divisibility by 2 checked per ring
    }
    return Series(a.ring(), std::move(b));
}

Series transform_u(const Series& a) {
    require_z_or_q(a.ring(), "completion transform");
    if (!a[0].is_one())
        throw PreconditionViolation("completion transform needs a_0 = 1, got " + a[0].str());
    return even_from_odd(a.ring(), odd_coefficients(a), a.precision());
}

Series u_egf_check(const Series& a) {
    if (a.ring().kind() != RingKind::rationals)
        throw RingUnsupported("e.g.f. route needs rational coefficients");
    if (!a[0].is_one())
        throw PreconditionViolation("completion transform needs a_0 = 1, got " + a[0].str());
    std::vector<Value> d(a.precision(), Value::zero(a.ring()));
    for (std::size_t i = 1; i < a.precision(); i += 2)
        d[i] = a[i];
    const Series odd_part(a.ring(), std::move(d));
    const Series even_part = series_sqrt(
        add(identity_series(a.ring(), a.precision()), convolve(odd_part, odd_part)));
    return add(even_part, odd_part);
}

Series series_sqrt(const Series& c) {
    if (c.ring().kind() != RingKind::rationals)
        throw RingUnsupported("series sqrt needs rational coefficients");
    if (!c[0].is_one())
        throw DomainViolation("series sqrt needs constant term 1, got " + c[0].str());
    std::vector<Value> b;
    b.reserve(c.precision());
    b.push_back(Value::one(c.ring()));
    // From b * b = c: c_n = 2 b_n + sum_{h=1}^{n-1} C(n,h) b_h b_{n-h}.
    for (std::size_t n = 1; n < c.precision(); ++n) {
        Value acc = c[n];
        for (std::size_t h = 1; h < n; ++h)
            acc -= Value::from_integer(c.ring(), binomial(n, h)) * b[h] * b[n - h];
        b.push_back(exact_div_int(acc, 2));
    }
    return Series(c.ring(), std::move(b));
}

Series iterate_auto(const Series& a, std::size_t n) {
    if (!a[0].is_one())
        throw PreconditionViolation("autoconvolution iteration needs a_0 = 1, got " + a[0].str());
    Series cur = a;
    for (std::size_t i = 0; i < n; ++i)
        cur = autoconvolution(cur);
    return cur;
}

DynamicsTrace dynamics_converge(const Series& a) {
    const Series target = transform_u(a); // checks ring and a_0 = 1
    DynamicsTrace trace{a, {}, std::nullopt};
    Series cur = a;
    for (std::size_t step = 0;; ++step) {
        const Delta d = delta(cur, target);
        trace.steps.push_back({step, d});
        if (d.is_equal_at_precision()) {
            trace.converged_at = step;
            return trace;
        }
        if (step > a.precision())
            throw Error("autoconvolution iteration failed to converge"); // unreachable
        cur = autoconvolution(cur);
    }
}

} // namespace hurwitz
