#include <doctest.h>

#include "hurwitz/dynamics.hpp"
#include "hurwitz/transforms.hpp"
#include "support/common.hpp"

using namespace hurwitz;
using namespace testsupport;

TEST_CASE("alternating sign transform") {
    CHECK(alternating_sign(zs({1, 1, 1, 1})) == zs({1, -1, 1, -1}));
    CHECK(alternating_sign(alternating_sign(zs({3, 1, 4, 1}))) == zs({3, 1, 4, 1}));

    SUBCASE("multiplicative on a worked pair") {
        const Series a = zs({1, 2});
        const Series b = zs({1, 3});
        CHECK(convolve(a, b) == zs({1, 5}));
        CHECK(alternating_sign(convolve(a, b)) == zs({1, -5}));
        CHECK(convolve(alternating_sign(a), alternating_sign(b)) == zs({1, -5}));
    }
    SUBCASE("automorphism (randomized, N = 12)") {
        Rand rng(101);
        for (int t = 0; t < 100; ++t) {
            const Series a = rng.series(Ring::integers(), 12);
            const Series b = rng.series(Ring::integers(), 12);
            CHECK(alternating_sign(add(a, b)) == add(alternating_sign(a), alternating_sign(b)));
            CHECK(alternating_sign(convolve(a, b)) ==
                  convolve(alternating_sign(a), alternating_sign(b)));
        }
    }
}

TEST_CASE("binomial interpolated transform") {
    CHECK(binomial_interpolated(zs({3, 1, 4, 1}), zv(0)) == zs({3, 1, 4, 1}));
    CHECK(binomial_interpolated(zs({1, 0, 0, 0}), zv(2)) == zs({1, 2, 4, 8}));
    CHECK(binomial_interpolated(zs({1, 1, 1}), zv(1)) == zs({1, 2, 4}));
    CHECK_THROWS_AS(binomial_interpolated(zs({1, 1}), qv("1")), RingMismatch);

    SUBCASE("parameter composition (randomized)") {
        Rand rng(102);
        for (int t = 0; t < 100; ++t) {
            const Series a = rng.series(Ring::rationals(), 10);
            const Value y1 = rng.value(Ring::rationals());
            const Value y2 = rng.value(Ring::rationals());
            CHECK(binomial_interpolated(binomial_interpolated(a, y1), y2) ==
                  binomial_interpolated(a, y1 + y2));
        }
    }
}

TEST_CASE("zigzag numbers") {
    const ZigzagTable t = zigzag_numbers(16);
    SUBCASE("golden prefix, OEIS A000111") {
        const mpz_class golden[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
        for (std::size_t i = 0; i < 10; ++i)
            CHECK(t.beta[i] == golden[i]);
    }
    SUBCASE("quadratic recurrence oracle to N = 16") {
        CHECK(t.beta == beta_by_quadratic(16));
    }
    SUBCASE("entringer boundary rows") {
        CHECK(t.entringer.at(0, 0) == 1);
        for (std::size_t n = 1; n < 16; ++n)
            CHECK(t.entringer.at(n, 0) == 0);
    }
    SUBCASE("sec/tan identity: E(beta) * beta = identity at N = 12") {
        const Series beta = beta_series(Ring::integers(), 12);
        CHECK(convolve(alternating_sign(beta), beta) == identity_series(Ring::integers(), 12));
        CHECK(is_in_br(beta));
    }
    CHECK_THROWS_AS(zigzag_numbers(0), DomainViolation);
}

TEST_CASE("boustrophedon transform") {
    CHECK(boustrophedon(identity_series(Ring::integers(), 8)) ==
          beta_series(Ring::integers(), 8));
    CHECK(boustrophedon(zs({1, 1, 1, 1, 1, 1})) == zs({1, 2, 4, 9, 24, 77}));

    SUBCASE("beta times its sign transform is the identity") {
        const Series eb = alternating_sign(beta_series(Ring::integers(), 10));
        CHECK(boustrophedon(eb) == identity_series(Ring::integers(), 10));
    }
    SUBCASE("matches the direct triangle fill (randomized, N = 12)") {
        Rand rng(103);
        for (int t = 0; t < 50; ++t) {
            const Series a = rng.series(Ring::integers(), 12);
            // direct definition: T(n,0) = a_n, T(n,k) = T(n,k-1) + T(n-1,n-k)
            std::vector<std::vector<Value>> rows;
            std::vector<Value> out;
            for (std::size_t n = 0; n < 12; ++n) {
                std::vector<Value> row{a[n]};
                for (std::size_t k = 1; k <= n; ++k)
                    row.push_back(row[k - 1] + rows[n - 1][n - k]);
                out.push_back(row[n]);
                rows.push_back(std::move(row));
            }
            CHECK(boustrophedon(a) == Series(Ring::integers(), out));
        }
    }
}

TEST_CASE("stirling tables") {
    const auto [s2, s1] = stirling_tables(10);
    CHECK(s2.at(4, 2) == 7);
    CHECK(s1.at(4, 2) == 11);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(s2.at(n, n) == 1);
        CHECK(s1.at(n, n) == 1);
    }
    SUBCASE("enumeration oracles for small entries") {
        for (std::size_t n = 0; n <= 6; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                CHECK(s2.at(n, k) == stirling2_count(n, k));
                CHECK(s1.at(n, k) == stirling1_count(n, k));
            }
    }
    SUBCASE("row sums: Bell numbers and factorials") {
        const mpz_class bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
        for (std::size_t n = 0; n <= 10; ++n) {
            mpz_class sum2 = 0, sum1 = 0;
            for (std::size_t k = 0; k <= n; ++k) {
                sum2 += s2.at(n, k);
                sum1 += s1.at(n, k);
            }
            CHECK(sum2 == bell[n]);
            CHECK(sum1 == factorial(n));
        }
    }
}

TEST_CASE("stirling transform") {
    CHECK(stirling_transform(identity_series(Ring::integers(), 6)) ==
          identity_series(Ring::integers(), 6));
    CHECK(stirling_transform(zs({1, 1, 1, 1, 1, 1})) == zs({1, 1, 2, 5, 15, 52}));
    CHECK(stirling_inverse(stirling_transform(zs({1, 3, 0, 7}))) == zs({1, 3, 0, 7}));

    SUBCASE("automorphism over Z (randomized, N = 10)") {
        Rand rng(104);
        for (int t = 0; t < 100; ++t) {
            const Series a = rng.series(Ring::integers(), 10);
            const Series b = rng.series(Ring::integers(), 10);
            CHECK(stirling_transform(add(a, b)) ==
                  add(stirling_transform(a), stirling_transform(b)));
            CHECK(stirling_transform(convolve(a, b)) ==
                  convolve(stirling_transform(a), stirling_transform(b)));
            CHECK(stirling_inverse(stirling_transform(a)) == a);
        }
    }
    SUBCASE("e.g.f. substitution t -> e^t - 1 (composition oracle over Q)") {
        Rand rng(105);
        for (int t = 0; t < 25; ++t) {
            const Series a = rng.series(Ring::rationals(), 10);
            CHECK(stirling_transform(a) == egf_compose_exp_minus_one(a));
        }
    }
    SUBCASE("works over modular rings") {
        const Series a = ms(7, {1, 1, 1, 1, 1});
        CHECK(stirling_inverse(stirling_transform(a)) == a);
    }
}

TEST_CASE("series exp and log") {
    const Ring q = Ring::rationals();
    CHECK(series_exp(Series::zero(q, 5)) == identity_series(q, 5));
    CHECK(series_exp(qs({"0", "1", "0", "0", "0"})) == qs({"1", "1", "1", "1", "1"}));
    CHECK(series_log(series_exp(qs({"0", "1/2", "0", "-1/3"}))) == qs({"0", "1/2", "0", "-1/3"}));

    SUBCASE("rejections") {
        CHECK_THROWS_AS(series_exp(qs({"1", "0"})), DomainViolation);
        CHECK_THROWS_AS(series_log(qs({"0", "1"})), DomainViolation);
        CHECK_THROWS_AS(series_exp(zs({0, 1})), RingUnsupported);
        CHECK_THROWS_AS(series_log(zs({1, 1})), RingUnsupported);
    }
    SUBCASE("exp matches the truncated power sum oracle") {
        Rand rng(106);
        for (int t = 0; t < 25; ++t) {
            Series h = rng.series(q, 10);
            std::vector<Value> c = h.coeffs();
            c[0] = Value::zero(q);
            h = Series(q, c);
            CHECK(series_exp(h) == exp_by_power_sum(h));
        }
    }
    SUBCASE("exp turns termwise sums into products") {
        Rand rng(107);
        for (int t = 0; t < 50; ++t) {
            Series a = rng.series(q, 10);
            Series b = rng.series(q, 10);
            std::vector<Value> ca = a.coeffs(), cb = b.coeffs();
            ca[0] = cb[0] = Value::zero(q);
            a = Series(q, ca);
            b = Series(q, cb);
            CHECK(series_exp(add(a, b)) == convolve(series_exp(a), series_exp(b)));
        }
    }
    SUBCASE("log then exp round-trips on constant-term-1 series") {
        Rand rng(108);
        for (int t = 0; t < 50; ++t) {
            const Series a = rng.u_series(q, 12);
            CHECK(series_exp(series_log(a)) == a);
        }
    }
    SUBCASE("exp of an odd series lands in B_Q (randomized, N = 14)") {
        Rand rng(109);
        for (int t = 0; t < 50; ++t) {
            const Series h = rng.odd_series_q(14);
            const Series a = series_exp(h);
            CHECK(is_in_br(a));
            CHECK(convolve(alternating_sign(a), a) == identity_series(q, 14));
        }
    }
}

TEST_CASE("parity check") {
    CHECK(parity_check(zs({1, 0, 3, 0})) == Parity::even);
    CHECK(parity_check(zs({0, 2, 0, 5})) == Parity::odd);
    CHECK(parity_check(zs({1, 1, 0, 0})) == Parity::neither);
    CHECK(parity_check(Series::zero(Ring::integers(), 4)) == Parity::even);
}
