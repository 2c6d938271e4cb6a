#pragma once

#include <cstddef>
#include <vector>

#include "hurwitz/ring.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Input sequence x_1..x_L for the ordinary Bell polynomials, 1-indexed
/// with ordinary-g.f. semantics: x is read as sum_{i>=1} x_i z^i.
struct BellInput {
    Ring ring;
    std::vector<Value> x; // x[i-1] holds x_i; L >= 1

    BellInput(Ring r, std::vector<Value> values);
    std::size_t size() const { return x.size(); }
};

/// Dynamic-programming table of partial ordinary Bell polynomials
/// B_{n,k}(x), defined by (sum_{i>=1} x_i z^i)^k = sum_{n>=k} B_{n,k} z^n
/// and computed by B_{n,k} = sum_{i=1}^{n-k+1} x_i B_{n-i,k-1}.
/// Cells with n >= k >= 1 and n-k+1 > L cannot be evaluated from the
/// supplied input; querying one raises InsufficientInput.
class BellTable {
public:
    BellTable(BellInput input, std::size_t n_max, std::size_t k_max);

    const Value& at(std::size_t n, std::size_t k) const;
    /// Complete polynomial B_n = sum_{k=1}^{n} B_{n,k}, with B_0 = 1.
    Value complete(std::size_t n) const;

private:
    BellInput input_;
    std::size_t n_max_, k_max_;
    std::vector<Value> cells_;
    std::vector<bool> valid_;
};

/// B_{n,k}(x). Boundary values: B_{0,0} = 1, B_{n,0} = 0 for n >= 1,
/// B_{0,k} = 0 for k >= 1; B_{n,k} = 0 for n < k.
Value partial_bell(const BellInput& x, std::size_t n, std::size_t k);

/// B_n(x) = sum_{k=1}^{n} B_{n,k}(x), B_0 = 1. Needs L >= n.
Value complete_bell(const BellInput& x, std::size_t n);

/// Invert transform on raw coefficient lists under ordinary-g.f. semantics
/// (deliberately separate from the Hurwitz e.g.f. semantics):
/// B(t) = A(t) / (1 - t A(t)), i.e. b_n = a_n + sum_{j<n} a_j b_{n-1-j}.
std::vector<Value> invert_transform(const Ring& ring, const std::vector<Value>& a);

/// Closed form for the convolution inverse via complete Bell polynomials:
/// b_n = n! B_n(x) / a_0 with x_i = -a_i / (a_0 i!). Rationals only;
/// an integer series with unit constant term is lifted and the result
/// converted back after an integrality check.
Series invert_closed_form(const Series& a);

} // namespace hurwitz
