#include "hurwitz/bell.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "hurwitz/tables.hpp"

namespace hurwitz {

BellInput::BellInput(Ring r, std::vector<Value> values)
    : ring(std::move(r)), x(std::move(values)) {
    if (x.empty())
        throw InsufficientInput("Bell input needs at least x_1");
    for (const Value& v : x)
        if (v.ring() != ring)
            throw RingMismatch("Bell input value ring " + v.ring().tag() +
                               " does not match declared ring " + ring.tag());
}

BellTable::BellTable(BellInput input, std::size_t n_max, std::size_t k_max)
    : input_(std::move(input)), n_max_(n_max), k_max_(k_max),
      cells_((n_max + 1) * (k_max + 1), Value::zero(input_.ring)),
      valid_((n_max + 1) * (k_max + 1), true) {
    const std::size_t len = input_.size();
    const std::size_t stride = k_max_ + 1;
    auto cell = [&](std::size_t n, std::size_t k) -> Value& { return cells_[n * stride + k]; };
    auto ok = [&](std::size_t n, std::size_t k) -> std::vector<bool>::reference {
        return valid_[n * stride + k];
    };

    cell(0, 0) = Value::one(input_.ring);
    for (std::size_t n = 1; n <= n_max_; ++n) {
        for (std::size_t k = 1; k <= std::min(n, k_max_); ++k) {
            if (n - k + 1 > len) {
                ok(n, k) = false; // formula touches x beyond the supplied input
                continue;
            }
            Value acc = Value::zero(input_.ring);
            bool usable = true;
            for (std::size_t i = 1; i <= n - k + 1; ++i) {
                if (!ok(n - i, k - 1)) {
                    usable = false;
                    break;
                }
                acc += input_.x[i - 1] * cell(n - i, k - 1);
            }
            if (usable)
                cell(n, k) = std::move(acc);
            else
                ok(n, k) = false;
        }
    }
}

const Value& BellTable::at(std::size_t n, std::size_t k) const {
    if (n > n_max_ || k > k_max_)
        throw DomainViolation("Bell table index out of range");
    if (!valid_[n * (k_max_ + 1) + k])
        throw InsufficientInput("B_{" + std::to_string(n) + "," + std::to_string(k) +
                                "} needs x up to index " + std::to_string(n - k + 1) +
                                ", only " + std::to_string(input_.size()) + " supplied");
    return cells_[n * (k_max_ + 1) + k];
}

Value BellTable::complete(std::size_t n) const {
    if (n == 0)
        return Value::one(input_.ring);
    Value acc = Value::zero(input_.ring);
    for (std::size_t k = 1; k <= n; ++k)
        acc += at(n, k);
    return acc;
}

Value partial_bell(const BellInput& x, std::size_t n, std::size_t k) {
    if (k == 0)
        return n == 0 ? Value::one(x.ring) : Value::zero(x.ring);
    if (n < k)
        return Value::zero(x.ring); // (sum_{i>=1} x_i z^i)^k starts at z^k
    if (n - k + 1 > x.size())
        throw InsufficientInput("B_{" + std::to_string(n) + "," + std::to_string(k) +
                                "} needs x up to index " + std::to_string(n - k + 1) +
                                ", only " + std::to_string(x.size()) + " supplied");
    return BellTable(x, n, k).at(n, k);
}

Value complete_bell(const BellInput& x, std::size_t n) {
    if (n == 0)
        return Value::one(x.ring);
    if (n > x.size())
        throw InsufficientInput("B_" + std::to_string(n) + " needs x_1..x_" +
                                std::to_string(n) + ", only " + std::to_string(x.size()) +
                                " supplied");
    return BellTable(x, n, n).complete(n);
}

std::vector<Value> invert_transform(const Ring& ring, const std::vector<Value>& a) {
    std::vector<Value> b;
    b.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (a[n].ring() != ring)
            throw RingMismatch("invert transform input ring mismatch");
        Value acc = a[n];
        for (std::size_t j = 0; j < n; ++j)
            acc += a[j] * b[n - 1 - j];
        b.push_back(std::move(acc));
    }
    return b;
}

namespace {

Series invert_closed_form_rational(const Series& a) {
    if (a[0].is_zero())
        throw NotInvertible("constant term 0 has no inverse in Q");
    const Ring& q = a.ring();
    const Value a0_inv = ring_invert(a[0]);
    std::vector<Value> b;
    b.reserve(a.precision());
    b.push_back(a0_inv);
    if (a.precision() == 1)
        return Series(q, std::move(b));

    // x_i = -a_i / (a_0 i!), the ordinary g.f. of (1 - A(t)/a_0) / t.
    std::vector<Value> x;
    x.reserve(a.precision() - 1);
    for (std::size_t i = 1; i < a.precision(); ++i) {
        Value v = -(a0_inv * a[i]);
        x.push_back(exact_div_int(v, factorial(i)));
    }
    const BellTable table(BellInput(q, std::move(x)), a.precision() - 1, a.precision() - 1);
    for (std::size_t n = 1; n < a.precision(); ++n)
        b.push_back(Value::from_integer(q, factorial(n)) * table.complete(n) * a0_inv);
    return Series(q, std::move(b));
}

} // namespace

Series invert_closed_form(const Series& a) {
    switch (a.ring().kind()) {
    case RingKind::rationals:
        return invert_closed_form_rational(a);
    case RingKind::integers: {
        const mpz_class& a0 = a[0].integer();
        if (a0 != 1 && a0 != -1)
            throw NotInvertible(a0.get_str() + " is not a unit of Z");
        return rational_to_integers(invert_closed_form_rational(lift_series(a)));
    }
    case RingKind::modular:
        throw RingUnsupported("closed-form inverse needs factorial divisions; use Q or Z");
    }
    throw Error("corrupt ring kind");
}

} // namespace hurwitz
