#include "hurwitz/tables.hpp"

#include <mutex>
#include <stdexcept>

#include "hurwitz/errors.hpp"

namespace hurwitz {

const mpz_class& TriangleTable::at(std::size_t n, std::size_t k) const {
    if (n >= rows.size() || k >= rows[n].size())
        throw DomainViolation("triangle index out of range");
    return rows[n][k];
}

TriangleTable pascal_table(std::size_t n_max) {
    TriangleTable t{TriangleKind::pascal, {}};
    t.rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<mpz_class> row(n + 1);
        row[0] = 1;
        row[n] = 1;
        for (std::size_t k = 1; k < n; ++k)
            row[k] = t.rows[n - 1][k - 1] + t.rows[n - 1][k];
        t.rows.push_back(std::move(row));
    }
    return t;
}

TriangleTable stirling2_table(std::size_t n_max) {
    TriangleTable t{TriangleKind::stirling2, {}};
    t.rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<mpz_class> row(n + 1);
        if (n == 0) {
            row[0] = 1;
        } else {
            row[0] = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                mpz_class v = t.rows[n - 1][k - 1];
                if (k < n)
                    v += mpz_class(k) * t.rows[n - 1][k];
                row[k] = v;
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

TriangleTable stirling1_table(std::size_t n_max) {
    TriangleTable t{TriangleKind::stirling1_unsigned, {}};
    t.rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<mpz_class> row(n + 1);
        if (n == 0) {
            row[0] = 1;
        } else {
            row[0] = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                mpz_class v = t.rows[n - 1][k - 1];
                if (k < n)
                    v += mpz_class(n - 1) * t.rows[n - 1][k];
                row[k] = v;
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::pair<TriangleTable, TriangleTable> stirling_tables(std::size_t n_max) {
    return {stirling2_table(n_max), stirling1_table(n_max)};
}

TriangleTable entringer_table(std::size_t n_max) {
    TriangleTable t{TriangleKind::entringer, {}};
    t.rows.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<mpz_class> row(n + 1);
        row[0] = (n == 0) ? 1 : 0;
        for (std::size_t k = 1; k <= n; ++k)
            row[k] = row[k - 1] + t.rows[n - 1][n - k];
        t.rows.push_back(std::move(row));
    }
    return t;
}

namespace {

std::mutex cache_mutex;
std::vector<std::vector<mpz_class>> pascal_cache; // grown monotonically
std::vector<mpz_class> factorial_cache;

} // namespace

mpz_class binomial(std::size_t n, std::size_t k) {
    if (k > n)
        return 0;
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (pascal_cache.size() <= n) {
        const std::size_t m = pascal_cache.size();
        std::vector<mpz_class> row(m + 1);
        row[0] = 1;
        row[m] = 1;
        for (std::size_t j = 1; j < m; ++j)
            row[j] = pascal_cache[m - 1][j - 1] + pascal_cache[m - 1][j];
        pascal_cache.push_back(std::move(row));
    }
    return pascal_cache[n][k];
}

mpz_class factorial(std::size_t n) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (factorial_cache.empty())
        factorial_cache.push_back(1);
    while (factorial_cache.size() <= n)
        factorial_cache.push_back(factorial_cache.back() *
                                  mpz_class(factorial_cache.size()));
    return factorial_cache[n];
}

} // namespace hurwitz
