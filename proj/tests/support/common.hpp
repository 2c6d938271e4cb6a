#pragma once

// Shared test helpers: terse constructors, a seeded generator, and the
// independent oracles (enumeration / naive-arithmetic routes) that the
// library implementations are checked against. Everything here must stay
// independent of the implementation path it verifies.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hurwitz/bell.hpp"
#include "hurwitz/ring.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/tables.hpp"

namespace testsupport {

using namespace hurwitz;

inline Value zv(long n) { return Value(Ring::integers(), mpz_class(n)); }

inline Value qv(const char* text) {
    mpq_class q(text);
    q.canonicalize();
    return Value(Ring::rationals(), q);
}

inline Value mv(long m, long x) { return Value(Ring::modular(m), mpz_class(x)); }

inline Series zs(std::initializer_list<long> v) {
    std::vector<Value> c;
    for (long n : v)
        c.push_back(zv(n));
    return Series(Ring::integers(), std::move(c));
}

inline Series qs(std::initializer_list<const char*> v) {
    std::vector<Value> c;
    for (const char* t : v)
        c.push_back(qv(t));
    return Series(Ring::rationals(), std::move(c));
}

inline Series ms(long m, std::initializer_list<long> v) {
    std::vector<Value> c;
    for (long x : v)
        c.push_back(mv(m, x));
    return Series(Ring::modular(m), std::move(c));
}

// Deterministic generator with the documented coefficient bounds:
// Z in [-9,9], Q with numerator in [-9,9] and denominator in [1,9],
// Z/mZ in [0,m).
class Rand {
public:
    explicit Rand(std::uint64_t seed) : eng_(seed) {}

    long range(long lo, long hi) {
        return lo + static_cast<long>(eng_() % static_cast<unsigned long>(hi - lo + 1));
    }

    Value value(const Ring& ring) {
        switch (ring.kind()) {
        case RingKind::integers:
            return Value(ring, mpz_class(range(-9, 9)));
        case RingKind::rationals:
            return Value(ring, mpq_class(mpz_class(range(-9, 9)), mpz_class(range(1, 9))));
        case RingKind::modular:
            return Value(ring, mpz_class(range(0, static_cast<long>(ring.modulus().get_ui()) - 1)));
        }
        throw Error("corrupt ring kind");
    }

    Value nonzero_value(const Ring& ring) {
        for (;;) {
            Value v = value(ring);
            if (!v.is_zero())
                return v;
        }
    }

    Series series(const Ring& ring, std::size_t n) {
        std::vector<Value> c;
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(value(ring));
        return Series(ring, std::move(c));
    }

    Series unit_series(const Ring& ring, std::size_t n) {
        std::vector<Value> c = series(ring, n).coeffs();
        for (;;) {
            try {
                ring_invert(c[0]);
                break;
            } catch (const NotInvertible&) {
                c[0] = value(ring);
            }
        }
        return Series(ring, std::move(c));
    }

    Series u_series(const Ring& ring, std::size_t n) {
        std::vector<Value> c = series(ring, n).coeffs();
        c[0] = Value::one(ring);
        return Series(ring, std::move(c));
    }

    Series odd_series_q(std::size_t n) {
        const Ring q = Ring::rationals();
        std::vector<Value> c(n, Value::zero(q));
        for (std::size_t i = 1; i < n; i += 2)
            c[i] = value(q);
        return Series(q, std::move(c));
    }

    std::vector<Value> values(const Ring& ring, std::size_t count) {
        std::vector<Value> v;
        for (std::size_t i = 0; i < count; ++i)
            v.push_back(value(ring));
        return v;
    }

private:
    std::mt19937_64 eng_;
};

// ---- oracles ---------------------------------------------------------------

/// Residue scan inverse in Z/mZ; the reference for the extended-gcd route.
inline std::optional<mpz_class> mod_inverse_scan(const mpz_class& x, const mpz_class& m) {
    for (mpz_class y = 0; y < m; ++y)
        if (mpz_class(x * y) % m == ((1 % m) + m) % m)
            return y;
    return std::nullopt;
}

/// [z^n] (sum_{i>=1} x_i z^i)^k via naive truncated polynomial products.
inline Value ogf_power_coefficient(const Ring& ring, const std::vector<Value>& x, std::size_t n,
                                   std::size_t k) {
    std::vector<Value> poly(n + 1, Value::zero(ring));
    poly[0] = Value::one(ring);
    for (std::size_t rep = 0; rep < k; ++rep) {
        std::vector<Value> next(n + 1, Value::zero(ring));
        for (std::size_t i = 0; i <= n; ++i) {
            if (poly[i].is_zero())
                continue;
            for (std::size_t j = 1; j + i <= n && j <= x.size(); ++j)
                next[i + j] += poly[i] * x[j - 1];
        }
        poly = std::move(next);
    }
    return poly[n];
}

/// The explicit multinomial sum over {sum i_j = k, sum j*i_j = n}:
/// B_{n,k} = sum k!/(i_1!...i_L!) x_1^{i_1}...x_L^{i_L},
/// by recursive enumeration of the exponent vectors (i_1,...,i_L).
inline Value partial_bell_multinomial(const BellInput& x, std::size_t n, std::size_t k) {
    if (k == 0)
        return n == 0 ? Value::one(x.ring) : Value::zero(x.ring);
    struct Walker {
        const BellInput& x;
        std::size_t k;
        Value total;
        Walker(const BellInput& input, std::size_t k_)
            : x(input), k(k_), total(Value::zero(input.ring)) {}
        void walk(std::size_t j, std::size_t rem_k, long rem_n, mpz_class denom,
                  Value monomial) {
            if (rem_k == 0) {
                if (rem_n == 0)
                    total += exact_div_int(Value::from_integer(x.ring, factorial(k)), denom) *
                             monomial;
                return;
            }
            if (j > x.size())
                return;
            for (std::size_t i = 0; i <= rem_k; ++i) {
                const long weight = static_cast<long>(i) * static_cast<long>(j);
                if (weight > rem_n)
                    break;
                walk(j + 1, rem_k - i, rem_n - weight, denom * factorial(i),
                     monomial * pow_value(x.x[j - 1], i));
            }
        }
    };
    Walker w(x, k);
    w.walk(1, k, static_cast<long>(n), 1, Value::one(x.ring));
    return w.total;
}

/// Number of set partitions of {1..n} into exactly k blocks, by direct
/// enumeration of restricted growth strings.
inline mpz_class stirling2_count(std::size_t n, std::size_t k) {
    mpz_class count = 0;
    std::vector<std::size_t> assign(n, 0);
    // assign[i] in [0, 1 + max(assign[0..i-1])]
    struct Rec {
        std::size_t n, k;
        mpz_class count = 0;
        std::vector<std::size_t> assign;
        Rec(std::size_t n_, std::size_t k_) : n(n_), k(k_), assign(n_, 0) {}
        void go(std::size_t i, std::size_t blocks) {
            if (i == n) {
                if (blocks == k)
                    ++count;
                return;
            }
            for (std::size_t b = 0; b <= blocks; ++b) {
                assign[i] = b;
                go(i + 1, std::max(blocks, b + 1));
            }
        }
    };
    if (n == 0)
        return k == 0 ? 1 : 0;
    Rec rec(n, k);
    rec.go(0, 0);
    count = rec.count;
    return count;
}

/// Number of permutations of n elements with exactly k cycles, by
/// enumerating all permutations.
inline mpz_class stirling1_count(std::size_t n, std::size_t k) {
    if (n == 0)
        return k == 0 ? 1 : 0;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    mpz_class count = 0;
    do {
        std::vector<bool> seen(n, false);
        std::size_t cycles = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (seen[i])
                continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = perm[j])
                seen[j] = true;
        }
        if (cycles == k)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Zigzag numbers by the quadratic identity 2 beta_{n+1} =
/// sum_k C(n,k) beta_k beta_{n-k}, seeded beta_0 = beta_1 = 1.
inline std::vector<mpz_class> beta_by_quadratic(std::size_t count) {
    std::vector<mpz_class> beta{1, 1};
    while (beta.size() < count) {
        const std::size_t n = beta.size() - 1;
        mpz_class sum = 0;
        for (std::size_t k = 0; k <= n; ++k)
            sum += binomial(n, k) * beta[k] * beta[n - k];
        mpz_class next;
        mpz_divexact_ui(next.get_mpz_t(), sum.get_mpz_t(), 2);
        beta.push_back(next);
    }
    beta.resize(count);
    return beta;
}

/// Independent reconstruction oracle: solve E(a) * a = identity for the
/// even-index terms, one coefficient at a time. At even index m the unknown
/// a_m enters the constraint as 2 a_m, all other terms being known.
inline Series even_terms_by_equation(const Ring& ring, const std::vector<Value>& odds,
                                     std::size_t precision) {
    std::vector<Value> a(precision, Value::zero(ring));
    a[0] = Value::one(ring);
    for (std::size_t i = 1; i < precision; i += 2)
        a[i] = odds[(i - 1) / 2];
    for (std::size_t m = 2; m < precision; m += 2) {
        Value sum = Value::zero(ring);
        for (std::size_t h = 1; h < m; ++h) {
            Value term = Value::from_integer(ring, binomial(m, h)) * a[h] * a[m - h];
            sum += (h % 2) ? -term : term;
        }
        a[m] = exact_div_int(-sum, 2);
    }
    return Series(ring, std::move(a));
}

/// E.g.f. substitution t -> e^t - 1 computed with naive ordinary-g.f.
/// polynomial arithmetic over Q; the reference for the Stirling transform.
inline Series egf_compose_exp_minus_one(const Series& a) {
    const Ring& q = a.ring();
    const std::size_t n = a.precision();
    auto mul_trunc = [&](const std::vector<Value>& f, const std::vector<Value>& g) {
        std::vector<Value> out(n, Value::zero(q));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; i + j < n; ++j)
                out[i + j] += f[i] * g[j];
        return out;
    };

    std::vector<Value> inner(n, Value::zero(q)); // ordinary coefficients of e^t - 1
    for (std::size_t i = 1; i < n; ++i)
        inner[i] = exact_div_int(Value::one(q), factorial(i));

    std::vector<Value> acc(n, Value::zero(q));
    std::vector<Value> power(n, Value::zero(q));
    power[0] = Value::one(q);
    for (std::size_t k = 0; k < n; ++k) {
        const Value u_k = exact_div_int(a[k], factorial(k));
        for (std::size_t i = 0; i < n; ++i)
            acc[i] += u_k * power[i];
        power = mul_trunc(power, inner);
    }
    for (std::size_t i = 0; i < n; ++i)
        acc[i] *= Value::from_integer(q, factorial(i));
    return Series(q, std::move(acc));
}

/// exp as the truncated power sum sum_j h^(*j) / j! (h_0 = 0 makes it finite).
inline Series exp_by_power_sum(const Series& h) {
    const Ring& q = h.ring();
    const std::size_t n = h.precision();
    Series acc = identity_series(q, n);
    Series power = identity_series(q, n);
    for (std::size_t j = 1; j < n; ++j) {
        power = convolve(power, h);
        std::vector<Value> scaled;
        for (std::size_t i = 0; i < n; ++i)
            scaled.push_back(exact_div_int(power[i], factorial(j)));
        acc = add(acc, Series(q, std::move(scaled)));
    }
    return acc;
}

} // namespace testsupport
