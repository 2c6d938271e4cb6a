#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "hurwitz/ring.hpp"

namespace hurwitz {

/// Truncated Hurwitz series: coefficients a_0..a_{N-1} where a_n is the
/// coefficient of t^n/n! in the exponential generating function. The
/// precision N >= 1 is explicit; no operation silently extends a series
/// with zeros.
class Series {
public:
    Series(Ring ring, std::vector<Value> coeffs); // nonempty, single-ring

    static Series zero(const Ring& ring, std::size_t precision);

    const Ring& ring() const { return ring_; }
    std::size_t precision() const { return coeffs_.size(); }
    const Value& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<Value>& coeffs() const { return coeffs_; }

    bool operator==(const Series& other) const;
    bool operator!=(const Series& other) const { return !(*this == other); }

    friend std::ostream& operator<<(std::ostream& os, const Series& s);

private:
    Ring ring_;
    std::vector<Value> coeffs_;
};

/// Ultrametric distance, stored exactly as the agreement length k (first
/// index where the series differ; metric value 2^-k). Two series equal up
/// to the compared precision get the EqualAtPrecision sentinel, which
/// compares strictly below every finite disagreement.
class Delta {
public:
    static Delta disagreement(std::size_t k) { return Delta(false, k); }
    static Delta equal_at_precision(std::size_t n) { return Delta(true, n); }

    bool is_equal_at_precision() const { return equal_; }
    /// Length of the common prefix (the compared precision when equal).
    std::size_t agreement() const { return k_; }
    /// Metric value as a string, "2^-<k>".
    std::string metric() const;

    bool operator==(const Delta& other) const = default;

private:
    Delta(bool equal, std::size_t k) : equal_(equal), k_(k) {}

    bool equal_;
    std::size_t k_;
};

bool metric_lt(const Delta& a, const Delta& b);
bool metric_le(const Delta& a, const Delta& b);
const Delta& metric_max(const Delta& a, const Delta& b);

/// Binomial convolution c_n = sum_{h=0}^{n} C(n,h) a_h b_{n-h}; the product
/// of the exponential generating functions. Output precision min(N_a, N_b).
Series convolve(const Series& a, const Series& b);

/// Termwise sum / difference / negation, precision min(N_a, N_b).
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);

/// (1,0,0,...) — the convolution identity.
Series identity_series(const Ring& ring, std::size_t precision);

/// Ring embedding r -> (r,0,0,...).
Series embed_scalar(const Value& r, std::size_t precision);

/// Convolution inverse. Requires a_0 invertible; computed by the recurrence
/// b_0 = a_0^{-1}, b_n = -a_0^{-1} sum_{h=1}^{n} C(n,h) a_h b_{n-h}.
Series invert_series(const Series& a);

/// Left shift b_n = a_{n+1} (the derivative of the e.g.f.); precision N-1.
Series derivative(const Series& a);

/// Right shift with r at index 0; precision N+1. derivative(prepend(a, r)) = a.
Series prepend(const Series& a, const Value& r);

/// k-fold 1-prepending (k >= 1): (1,...,1,a_0,a_1,...), precision N+k.
Series prepend_ones(const Series& a, std::size_t k);

/// Length-n prefix, 1 <= n <= precision.
Series truncate(const Series& a, std::size_t n);

/// Ultrametric distance, compared up to min(N_a, N_b).
Delta delta(const Series& a, const Series& b);

/// Lift a series Z -> Q termwise (identity on Q).
Series lift_series(const Series& a);

/// Convert a rational series back to Z; IntegralityViolation when any
/// coefficient has a nontrivial denominator.
Series rational_to_integers(const Series& a);

} // namespace hurwitz
