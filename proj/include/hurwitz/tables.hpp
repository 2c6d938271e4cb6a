#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hurwitz {

enum class TriangleKind { pascal, stirling2, stirling1_unsigned, entringer };

/// Lower-triangular integer table; rows[n] holds entries for k = 0..n.
struct TriangleTable {
    TriangleKind kind;
    std::vector<std::vector<mpz_class>> rows;

    std::size_t row_count() const { return rows.size(); }
    const mpz_class& at(std::size_t n, std::size_t k) const;
};

/// Rows 0..n_max of C(n,k) built by the addition rule.
TriangleTable pascal_table(std::size_t n_max);

/// Stirling numbers of the second kind, S2(n,k) = k*S2(n-1,k) + S2(n-1,k-1).
TriangleTable stirling2_table(std::size_t n_max);

/// Unsigned Stirling numbers of the first kind,
/// c(n,k) = (n-1)*c(n-1,k) + c(n-1,k-1).
TriangleTable stirling1_table(std::size_t n_max);

/// Both Stirling tables at once: (second kind, unsigned first kind).
std::pair<TriangleTable, TriangleTable> stirling_tables(std::size_t n_max);

/// Entringer numbers: E(0,0) = 1, E(n,0) = 0 for n >= 1,
/// E(n,k) = E(n,k-1) + E(n-1,n-k). The diagonal E(n,n) gives the zigzag
/// numbers.
TriangleTable entringer_table(std::size_t n_max);

// Shared caches, grown on demand; thread-safe.
mpz_class binomial(std::size_t n, std::size_t k); // 0 when k > n
mpz_class factorial(std::size_t n);

} // namespace hurwitz
