#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hurwitz/series.hpp"

namespace hurwitz {

/// Membership in B_R = {a : a_0 = 1 and E(a) * a = identity}, checked at
/// the series' own precision.
bool is_in_br(const Series& a);

/// A series certified at construction to lie in B_R; rejects non-members,
/// so holding one is proof of membership at its precision.
class BrElement {
public:
    explicit BrElement(Series series); // PreconditionViolation on non-members

    const Series& series() const { return series_; }

private:
    Series series_;
};

/// Reconstruct the unique B_R element with the given odd-index terms
/// (a_1, a_3, ...) over Z or Q:
///   a_{2n} = (2n)! sum_{k=0}^{n} C(1/2,k) B_{n+k,2k}(x),  x_i = a_{2i-1}/(2i-1)!
/// Over Z the computation runs in Q and the result is converted back after
/// an integrality check. Precision n needs floor(n/2) odd terms.
Series even_from_odd(const Ring& ring, const std::vector<Value>& odds, std::size_t precision);

/// Reconstruct odd-index terms from even ones (a_2, a_4, ...) plus a chosen
/// square root of a_2:
///   a_{2n+1} = (2n+1)! sum_{k=0}^{n} sqrt_a2 a_2^{-k} C(1/2,k) B_{n,k}(x)
///   x_i = (1/(2i+2)!) sum_{k=0}^{i+1} C(2i+2,2k) a_{2k} a_{2(i-k+1)}
/// Needs a_2 invertible and sqrt_a2^2 = a_2; the square root is the
/// caller's certificate and is never computed here. The term a_{2n+1}
/// touches a_{2n+2}, so precision n needs floor(n/2) even terms.
Series odd_from_even(const Ring& ring, const std::vector<Value>& evens, const Value& sqrt_a2,
                     std::size_t precision);

/// Autoconvolution: fixes a_0 and the odd-index terms, and replaces each
/// even index m >= 2 by the value forced by membership in B_R:
///   b_m = -(1/2) sum_{h=1}^{m-1} C(m,h) (-1)^h a_h a_{m-h}.
/// Over Z the sum is always even (h <-> m-h pairing plus the even central
/// binomial), which the halving verifies at runtime. The constant term may
/// be any ring element; the fixed-point characterization concerns a_0 = 1.
Series autoconvolution(const Series& a);

/// Completion transform: copies a_0 = 1 and the odd-index terms and fills
/// every even index from the odd terms; the result is the unique B_R
/// element through the odd data, and a in B_R iff transform_u(a) = a.
Series transform_u(const Series& a);

/// The same completion computed through its e.g.f. identity
///   U(t) = (1 + D(t)^2)^{1/2} + D(t),  D = odd part of A,
/// as an independent route to transform_u (rationals only).
Series u_egf_check(const Series& a);

/// Principal square root: b with b * b = c and b_0 = 1 (rationals, c_0 = 1).
Series series_sqrt(const Series& c);

/// n-fold autoconvolution, for sequences with a_0 = 1.
Series iterate_auto(const Series& a, std::size_t n);

/// Iteration record of autoconvolution converging to transform_u(a):
/// one entry per iterate with its distance to the target. Distances
/// decrease strictly until the sentinel is reached.
struct DynamicsTrace {
    struct Step {
        std::size_t index;
        Delta to_target;
    };

    Series start;
    std::vector<Step> steps;
    std::optional<std::size_t> converged_at;
};

/// Iterate autoconvolution until the distance to transform_u(a) reaches
/// EqualAtPrecision. With precision 2n the fixed point is reached by step
/// n-1; odd precisions converge by step (n-1)/2 via the same bound on the
/// largest even prefix.
DynamicsTrace dynamics_converge(const Series& a);

} // namespace hurwitz
