#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "hurwitz/series.hpp"
#include "hurwitz/tables.hpp"

namespace hurwitz {

/// Alternating sign transform: b_n = (-1)^n a_n, the e.g.f. A(-t).
/// An involution and a ring automorphism.
Series alternating_sign(const Series& a);

/// Binomial interpolated transform with parameter y:
/// b_n = sum_h C(n,h) y^{n-h} a_h, equivalently (y^n) convolved with a.
/// Both routes are evaluated and compared.
Series binomial_interpolated(const Series& a, const Value& y);

/// Entringer triangle prefix plus its diagonal, the Euler zigzag numbers
/// beta (e.g.f. sec t + tan t).
struct ZigzagTable {
    TriangleTable entringer;     // rows 0..n-1
    std::vector<mpz_class> beta; // beta_0..beta_{n-1}
};

ZigzagTable zigzag_numbers(std::size_t n); // n >= 1

/// The zigzag numbers embedded into H_R.
Series beta_series(const Ring& ring, std::size_t n);

/// Boustrophedon transform: beta convolved with a (e.g.f. (sec t + tan t) A(t)).
Series boustrophedon(const Series& a);

/// Stirling transform b_n = sum_h S2(n,h) a_h and its inverse
/// b_n = sum_h (-1)^{n-h} c(n,h) a_h with unsigned first-kind numbers.
/// Table-driven, so they work over every coefficient ring.
Series stirling_transform(const Series& a);
Series stirling_inverse(const Series& a);

/// Formal exponential: for a_0 = 0 over Q, returns b with b_0 = 1 and
/// b_{n+1} = sum_{k=0}^{n} C(n,k) a_{k+1} b_{n-k}  (from B' = A'B).
Series series_exp(const Series& a);

/// Formal logarithm, the two-sided inverse of series_exp at precision;
/// needs a_0 = 1 over Q.
Series series_log(const Series& a);

enum class Parity { even, odd, neither };

/// Even iff every odd-index coefficient vanishes, odd iff every even-index
/// coefficient vanishes (index 0 included). The zero series reports even.
Parity parity_check(const Series& a);

} // namespace hurwitz
