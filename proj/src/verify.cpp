#include "hurwitz/verify.hpp"

#include <random>
#include <sstream>

#include "hurwitz/bell.hpp"
#include "hurwitz/dynamics.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/series.hpp"
#include "hurwitz/tables.hpp"
#include "hurwitz/transforms.hpp"

namespace hurwitz {

namespace {

// Coefficient bounds for the randomized suites, chosen to keep exact
// arithmetic small while exercising signs: Z draws from [-9,9], Q from
// numerators in [-9,9] over denominators in [1,9], Z/mZ from [0,m).
class Rand {
public:
    explicit Rand(std::uint64_t seed) : eng_(seed) {}

    long range(long lo, long hi) {
        return lo + static_cast<long>(eng_() %
                                           static_cast<unsigned long>(hi - lo + 1));
    }

    Value value(const Ring& ring) {
        switch (ring.kind()) {
        case RingKind::integers:
            return Value(ring, mpz_class(range(-9, 9)));
        case RingKind::rationals:
            return Value(ring, mpq_class(mpz_class(range(-9, 9)), mpz_class(range(1, 9))));
        case RingKind::modular: {
            const unsigned long m = ring.modulus().get_ui();
            return Value(ring, mpz_class(range(0, static_cast<long>(m) - 1)));
        }
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

    Value unit(const Ring& ring) {
        for (;;) {
            Value v = value(ring);
            try {
                ring_invert(v);
                return v;
            } catch (const NotInvertible&) {
            }
        }
    }

    Series series(const Ring& ring, std::size_t n) {
        std::vector<Value> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(value(ring));
        return Series(ring, std::move(c));
    }

    Series unit_series(const Ring& ring, std::size_t n) {
        Series s = series(ring, n);
        std::vector<Value> c = s.coeffs();
        c[0] = unit(ring);
        return Series(ring, std::move(c));
    }

    Series u_series(const Ring& ring, std::size_t n) {
        Series s = series(ring, n);
        std::vector<Value> c = s.coeffs();
        c[0] = Value::one(ring);
        return Series(ring, std::move(c));
    }

    Series br_series(const Ring& ring, std::size_t n) {
        std::vector<Value> odds;
        for (std::size_t i = 0; i < n / 2; ++i)
            odds.push_back(value(ring));
        return even_from_odd(ring, odds, n);
    }

    Series odd_series_q(std::size_t n) {
        const Ring q = Ring::rationals();
        std::vector<Value> c(n, Value::zero(q));
        for (std::size_t i = 1; i < n; i += 2)
            c[i] = value(q);
        return Series(q, std::move(c));
    }

private:
    std::mt19937_64 eng_;
};

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    void check(bool ok, const std::string& label, const std::string& detail) {
        ++report_.checks;
        if (!ok)
            report_.failures.push_back(label + ": " + detail);
    }

private:
    VerifyReport& report_;
};

template <typename T> std::string show(const T& value) {
    std::ostringstream os;
    os << value;
    return os.str();
}

std::string show_trial(std::uint64_t t) { return "trial " + std::to_string(t); }

// ---- ring suite -----------------------------------------------------------

void suite_ring(Checker& c, Rand& rng, std::uint64_t trials) {
    const Ring rings[] = {Ring::integers(), Ring::rationals(), Ring::modular(10),
                          Ring::modular(7)};

    const TriangleTable pascal = pascal_table(64);
    for (std::size_t n = 0; n <= 64; ++n) {
        mpz_class sum = 0;
        bool symmetric = true;
        for (std::size_t k = 0; k <= n; ++k) {
            sum += pascal.at(n, k);
            symmetric = symmetric && pascal.at(n, k) == pascal.at(n, n - k);
        }
        c.check(symmetric, "pascal symmetry", "row " + std::to_string(n));
        c.check(sum == mpz_class(1) << n, "pascal row sum 2^n", "row " + std::to_string(n));
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        for (const Ring& ring : rings) {
            const Value x = rng.unit(ring);
            c.check(ring_invert(ring_invert(x)) == x, "invert involution",
                    ring.tag() + " x=" + x.str() + " (" + show_trial(t) + ")");

            const mpz_class n(rng.range(1, 9));
            Value dividend = Value::zero(ring);
            bool defined = true;
            if (ring.kind() == RingKind::integers) {
                dividend = Value::from_integer(ring, n) * rng.value(ring);
            } else if (ring.kind() == RingKind::modular) {
                if (gcd(n, ring.modulus()) != 1)
                    defined = false;
                else
                    dividend = rng.value(ring);
            } else {
                dividend = rng.value(ring);
            }
            if (defined) {
                const Value quotient = exact_div_int(dividend, n);
                c.check(Value::from_integer(ring, n) * quotient == dividend,
                        "exact division round-trip",
                        ring.tag() + " x=" + dividend.str() + " n=" + n.get_str() + " (" +
                            show_trial(t) + ")");
            }
        }
    }
}

// ---- series suite ----------------------------------------------------------

void suite_series(Checker& c, Rand& rng, std::uint64_t trials) {
    const Ring rings[] = {Ring::integers(), Ring::rationals(), Ring::modular(7)};

    for (std::uint64_t t = 0; t < trials; ++t) {
        for (const Ring& ring : rings) {
            const Series a = rng.series(ring, 12);
            const Series b = rng.series(ring, 12);
            const Series d = rng.series(ring, 12);
            const std::string ctx = ring.tag() + " (" + show_trial(t) + ")";

            c.check(convolve(a, b) == convolve(b, a), "convolution commutative", ctx);
            c.check(convolve(convolve(a, b), d) == convolve(a, convolve(b, d)),
                    "convolution associative", ctx);
            c.check(convolve(a, identity_series(ring, 12)) == a, "identity neutral", ctx);
            c.check(convolve(a, add(b, d)) == add(convolve(a, b), convolve(a, d)),
                    "distributivity", ctx);

            c.check(delta(a, b) == delta(b, a), "delta symmetric", ctx);
            c.check(metric_le(delta(a, d), metric_max(delta(a, b), delta(b, d))),
                    "strong triangle inequality", ctx);
        }

        // Prefix stability: length-12 prefixes depend only on input prefixes
        // (length 12 for convolve/invert, 13 for derivative).
        const Ring z = Ring::integers();
        const Series a16 = rng.series(z, 16);
        const Series b16 = rng.series(z, 16);
        c.check(truncate(convolve(a16, b16), 12) ==
                    convolve(truncate(a16, 12), truncate(b16, 12)),
                "convolution prefix stability", show_trial(t));
        c.check(truncate(derivative(a16), 12) == derivative(truncate(a16, 13)),
                "derivative prefix stability", show_trial(t));

        const Series u16 = rng.unit_series(Ring::rationals(), 16);
        c.check(truncate(invert_series(u16), 12) == invert_series(truncate(u16, 12)),
                "inverse prefix stability", show_trial(t));
        c.check(invert_series(invert_series(u16)) == u16, "inverse involution",
                show_trial(t));
    }
}

// ---- bell suite -------------------------------------------------------------

// [z^n] (sum_{i>=1} x_i z^i)^k by naive truncated polynomial powers.
Value ogf_power_coefficient(const Ring& ring, const std::vector<Value>& x, std::size_t n,
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

void suite_bell(Checker& c, Rand& rng, std::uint64_t trials) {
    const Ring z = Ring::integers();
    const Ring q = Ring::rationals();

    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<Value> x;
        for (int i = 0; i < 6; ++i)
            x.push_back(rng.value(z));
        const BellInput input(z, x);
        for (std::size_t n = 0; n <= 8; ++n)
            for (std::size_t k = 0; k <= 4; ++k) {
                if (k >= 1 && n >= k && n - k + 1 > x.size())
                    continue;
                c.check(partial_bell(input, n, k) == ogf_power_coefficient(z, x, n, k),
                        "partial Bell generating identity",
                        "n=" + std::to_string(n) + " k=" + std::to_string(k) + " (" +
                            show_trial(t) + ")");
            }

        const Series a = rng.unit_series(q, 12);
        const Series closed = invert_closed_form(a);
        c.check(closed == invert_series(a), "closed-form inverse equals recurrence",
                show(a) + " (" + show_trial(t) + ")");
        c.check(convolve(a, closed) == identity_series(q, 12),
                "closed-form inverse convolution check", show(a) + " (" + show_trial(t) + ")");

        std::vector<Value> g;
        for (int i = 0; i < 10; ++i)
            g.push_back(rng.value(z));
        const std::vector<Value> h = invert_transform(z, g);
        const BellInput gx(z, g);
        bool hn_ok = true;
        for (std::size_t n = 0; n + 1 <= g.size() && hn_ok; ++n)
            hn_ok = h[n] == complete_bell(gx, n + 1);
        c.check(hn_ok, "invert transform Bell relation", show_trial(t));
    }
}

// ---- transforms suite --------------------------------------------------------

// Direct boustrophedon fill: T(n,0) = a_n, T(n,k) = T(n,k-1) + T(n-1,n-k),
// b_n = T(n,n).
Series boustrophedon_by_triangle(const Series& a) {
    std::vector<std::vector<Value>> rows;
    std::vector<Value> out;
    for (std::size_t n = 0; n < a.precision(); ++n) {
        std::vector<Value> row;
        row.reserve(n + 1);
        row.push_back(a[n]);
        for (std::size_t k = 1; k <= n; ++k)
            row.push_back(row[k - 1] + rows[n - 1][n - k]);
        out.push_back(row[n]);
        rows.push_back(std::move(row));
    }
    return Series(a.ring(), std::move(out));
}

void suite_transforms(Checker& c, Rand& rng, std::uint64_t trials) {
    const Ring z = Ring::integers();
    const Ring q = Ring::rationals();

    {
        const ZigzagTable t = zigzag_numbers(16);
        const mpz_class golden[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
        bool ok = true;
        for (std::size_t i = 0; i < 11; ++i)
            ok = ok && t.beta[i] == golden[i];
        c.check(ok, "zigzag golden prefix", "beta_0..beta_10");
        bool positive = t.beta[0] == 1 && t.beta[1] == 1;
        for (const mpz_class& b : t.beta)
            positive = positive && b > 0;
        c.check(positive, "zigzag positivity", "n=16");

        const Series beta = beta_series(z, 12);
        c.check(convolve(alternating_sign(beta), beta) == identity_series(z, 12),
                "zigzag sec/tan identity", "N=12");

        const Series ones(z, std::vector<Value>(8, Value::one(z)));
        const mpz_class bell_golden[] = {1, 1, 2, 5, 15, 52, 203, 877};
        const Series s_ones = stirling_transform(ones);
        bool bell_ok = true;
        for (std::size_t i = 0; i < 8; ++i)
            bell_ok = bell_ok && s_ones[i] == Value::from_integer(z, bell_golden[i]);
        c.check(bell_ok, "Stirling transform of all-ones", "Bell numbers N=8");

        const mpz_class bous_golden[] = {1, 2, 4, 9, 24, 77};
        const Series b_ones = boustrophedon(truncate(ones, 6));
        bool bous_ok = true;
        for (std::size_t i = 0; i < 6; ++i)
            bous_ok = bous_ok && b_ones[i] == Value::from_integer(z, bous_golden[i]);
        c.check(bous_ok, "boustrophedon of all-ones", "N=6");
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        for (const Ring& ring : {z, q, Ring::modular(7)}) {
            const Series a = rng.series(ring, 12);
            const Series b = rng.series(ring, 12);
            const std::string ctx = ring.tag() + " (" + show_trial(t) + ")";
            c.check(alternating_sign(add(a, b)) ==
                        add(alternating_sign(a), alternating_sign(b)),
                    "alternating sign additive", ctx);
            c.check(alternating_sign(convolve(a, b)) ==
                        convolve(alternating_sign(a), alternating_sign(b)),
                    "alternating sign multiplicative", ctx);
            c.check(alternating_sign(alternating_sign(a)) == a, "alternating sign involution",
                    ctx);
        }

        const Series az = rng.series(z, 10);
        const Series bz = rng.series(z, 10);
        c.check(stirling_transform(add(az, bz)) ==
                    add(stirling_transform(az), stirling_transform(bz)),
                "Stirling additive", show_trial(t));
        c.check(stirling_transform(convolve(az, bz)) ==
                    convolve(stirling_transform(az), stirling_transform(bz)),
                "Stirling multiplicative", show_trial(t));
        c.check(stirling_inverse(stirling_transform(az)) == az, "Stirling inverse round-trip",
                show_trial(t));

        const Value y1 = rng.value(z);
        const Value y2 = rng.value(z);
        c.check(binomial_interpolated(binomial_interpolated(az, y1), y2) ==
                    binomial_interpolated(az, y1 + y2),
                "binomial interpolated composition",
                "y1=" + y1.str() + " y2=" + y2.str() + " (" + show_trial(t) + ")");

        c.check(boustrophedon(az) == boustrophedon_by_triangle(az),
                "boustrophedon triangle route", show_trial(t));

        const Series odd = rng.odd_series_q(14);
        c.check(is_in_br(series_exp(odd)), "exp of odd series lands in B_Q",
                show(odd) + " (" + show_trial(t) + ")");
        const Series backto = series_log(series_exp(odd));
        c.check(backto == odd, "log after exp", show_trial(t));
    }
}

// ---- br suite ----------------------------------------------------------------

void suite_br(Checker& c, Rand& rng, std::uint64_t trials) {
    const Ring z = Ring::integers();
    const Ring q = Ring::rationals();

    {
        const Series beta = beta_series(z, 10);
        c.check(!is_in_br(stirling_transform(beta)), "Stirling image of zigzag leaves B_R",
                "N=10");
    }

    for (std::uint64_t t = 0; t < trials; ++t) {
        // Length-6 closed forms of the autoconvolution and completion maps.
        std::vector<Value> coeffs{Value::one(z)};
        for (int i = 0; i < 5; ++i)
            coeffs.push_back(rng.value(z));
        const Series a(z, coeffs);
        const Value& a1 = coeffs[1];
        const Value& a2 = coeffs[2];
        const Value& a3 = coeffs[3];
        const Value& a5 = coeffs[5];
        const Value four = Value::from_integer(z, 4);
        const Value three = Value::from_integer(z, 3);

        const Series expected_auto(
            z, {Value::one(z), a1, a1 * a1, a3, four * a1 * a3 - three * a2 * a2, a5});
        c.check(autoconvolution(a) == expected_auto, "autoconvolution length-6 closed form",
                show(a) + " (" + show_trial(t) + ")");

        const Series expected_u(
            z, {Value::one(z), a1, a1 * a1, a3, four * a1 * a3 - three * a1 * a1 * a1 * a1, a5});
        c.check(transform_u(a) == expected_u, "completion length-6 closed form",
                show(a) + " (" + show_trial(t) + ")");
        c.check(iterate_auto(a, 2) == transform_u(a), "double autoconvolution completes",
                show(a) + " (" + show_trial(t) + ")");

        // Closure of B_R under the sign, boustrophedon and binomial transforms.
        const Series m = rng.br_series(z, 14);
        const std::string ctx = show(m) + " (" + show_trial(t) + ")";
        c.check(is_in_br(m), "even-from-odd lands in B_R", ctx);
        c.check(is_in_br(alternating_sign(m)), "B_R closed under alternating sign", ctx);
        c.check(is_in_br(boustrophedon(m)), "B_R closed under boustrophedon", ctx);
        for (long y = -2; y <= 2; ++y)
            c.check(is_in_br(binomial_interpolated(m, Value::from_integer(z, y))),
                    "B_R closed under binomial interpolated",
                    "y=" + std::to_string(y) + " " + ctx);

        const Series m2 = rng.br_series(z, 14);
        c.check(is_in_br(convolve(m, m2)), "B_R closed under convolution", ctx);
        c.check(invert_series(m) == alternating_sign(m), "inverse is the sign transform", ctx);

        // Log characterization over Q (the zero log, reported even, is odd too).
        const Series mq = rng.br_series(q, 12);
        const Series lg = series_log(mq);
        c.check(parity_check(lg) == Parity::odd || lg == Series::zero(q, 12),
                "log of B_Q element is odd", show(mq) + " (" + show_trial(t) + ")");
        c.check(parity_check(convolve(derivative(mq), invert_series(mq))) == Parity::even,
                "log-derivative of B_Q element is even", show(mq) + " (" + show_trial(t) + ")");

        // Reconstruction round-trips with both square roots.
        std::vector<Value> odds;
        odds.push_back(rng.nonzero_value(q));
        for (int i = 0; i < 6; ++i)
            odds.push_back(rng.value(q));
        const Series full = even_from_odd(q, odds, 14);
        std::vector<Value> evens;
        for (std::size_t i = 2; i < 14; i += 2)
            evens.push_back(full[i]);
        const Series back = odd_from_even(q, evens, odds[0], 12);
        c.check(truncate(back, 12) == truncate(full, 12), "odd-from-even round-trip",
                show(full) + " (" + show_trial(t) + ")");
        const Series flipped = odd_from_even(q, evens, -odds[0], 12);
        c.check(flipped == alternating_sign(truncate(full, 12)),
                "negated root gives the sign transform", show(full) + " (" + show_trial(t) + ")");
    }
}

// ---- dynamics suite ------------------------------------------------------------

void suite_dynamics(Checker& c, Rand& rng, std::uint64_t trials) {
    const Ring z = Ring::integers();
    const Ring q = Ring::rationals();

    for (std::uint64_t t = 0; t < trials; ++t) {
        const Series a = rng.series(z, 16);
        const Series b = rng.series(z, 16);
        c.check(metric_le(delta(autoconvolution(a), autoconvolution(b)), delta(a, b)),
                "autoconvolution contraction", show(a) + " / " + show(b) + " (" +
                    show_trial(t) + ")");

        const Series member = rng.br_series(z, 14);
        c.check(autoconvolution(member) == member, "B_R elements are fixed points",
                show(member) + " (" + show_trial(t) + ")");
        const Series u = rng.u_series(z, 14);
        c.check(is_in_br(u) == (autoconvolution(u) == u), "fixed points are exactly B_R",
                show(u) + " (" + show_trial(t) + ")");

        const Series start = rng.u_series(z, 20);
        const DynamicsTrace trace = dynamics_converge(start);
        bool bound_ok = true;
        bool decreasing = true;
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
            const Delta& d = trace.steps[i].to_target;
            if (!d.is_equal_at_precision() && d.agreement() < 2 * (i + 1))
                bound_ok = false;
            if (i > 0 && !metric_lt(trace.steps[i].to_target, trace.steps[i - 1].to_target))
                decreasing = false;
        }
        c.check(bound_ok, "iteration agreement bound", show(start) + " (" + show_trial(t) + ")");
        c.check(decreasing, "iteration distances strictly decrease",
                show(start) + " (" + show_trial(t) + ")");
        c.check(trace.converged_at.has_value() && *trace.converged_at <= 9,
                "convergence within half precision", show(start) + " (" + show_trial(t) + ")");

        const Series uq = rng.u_series(q, 12);
        c.check(u_egf_check(uq) == transform_u(uq), "completion e.g.f. route",
                show(uq) + " (" + show_trial(t) + ")");
    }
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"ring",       "series", "bell",
                                                   "transforms", "br",     "dynamics"};
    return names;
}

VerifyReport run_suite(const std::string& name, std::uint64_t trials, std::uint64_t seed) {
    VerifyReport report;
    report.suite = name;
    report.trials = trials;
    report.seed = seed;

    Checker checker(report);
    Rand rng(seed);

    const auto start = std::chrono::steady_clock::now();
    if (name == "ring")
        suite_ring(checker, rng, trials);
    else if (name == "series")
        suite_series(checker, rng, trials);
    else if (name == "bell")
        suite_bell(checker, rng, trials);
    else if (name == "transforms")
        suite_transforms(checker, rng, trials);
    else if (name == "br")
        suite_br(checker, rng, trials);
    else if (name == "dynamics")
        suite_dynamics(checker, rng, trials);
    else
        throw UnknownSuite("unknown verification suite '" + name + "'");
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

std::vector<VerifyReport> run_all_suites(std::uint64_t trials, std::uint64_t seed) {
    std::vector<VerifyReport> reports;
    reports.reserve(suite_names().size());
    for (const std::string& name : suite_names())
        reports.push_back(run_suite(name, trials, seed));
    return reports;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream os;
    os << "suite: " << report.suite << "\n"
       << "seed: " << report.seed << "\n"
       << "trials: " << report.trials << "\n"
       << "checks: " << report.checks << "\n";
    for (const std::string& f : report.failures)
        os << "failure: " << f << "\n";
    os << "failures: " << report.failures.size() << "\n"
       << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

} // namespace hurwitz
