#pragma once

#include <gmpxx.h>

#include <vector>

#include "soperm/errors.hpp"

namespace soperm {

/// An ordinary generating function truncated at z^order, with
/// arbitrary-precision integer coefficients c_0..c_order.
class TruncatedSeries {
public:
    static constexpr int kDefaultOrder = 64;

    explicit TruncatedSeries(int order = kDefaultOrder)
        : coeffs_(static_cast<std::size_t>(order) + 1) {}

    TruncatedSeries(int order, std::vector<mpz_class> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(int n) const {
        return coeffs_[static_cast<std::size_t>(n)];
    }
    mpz_class& coeff(int n) { return coeffs_[static_cast<std::size_t>(n)]; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const TruncatedSeries&) const = default;

    /// P(z) = sum n! z^n, truncated.
    static TruncatedSeries permutations(int order);

    /// The constant series c.
    static TruncatedSeries constant(long c, int order);

private:
    std::vector<mpz_class> coeffs_;
};

/// Cauchy product; the result order is the min of the operand orders.
TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_subtract(const TruncatedSeries& a, const TruncatedSeries& b);

/// a(z^2), truncated at the input order.
TruncatedSeries series_substitute_square(const TruncatedSeries& a);

/// Integer-exact reciprocal; requires constant term +-1.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);

/// Non-self-overlapping counts n_1..n_N via
/// n_n = n! - sum_{1<=k<=n/2} n_k (n-2k)!.
std::vector<mpz_class> count_nso(int N);

/// Self-overlapping counts s_1..s_N via s_n = sum_{k<=n/2} n_k (n-2k)!.
std::vector<mpz_class> count_so(int N);

/// [z^n] N(z)^m for n = 0..N: permutations written as a sequence of m
/// non-self-overlapping blocks, counted with multiplicity of representations.
std::vector<mpz_class> count_nso_m(int N, int m);

/// Counts s_n^(m) of permutations whose palindromic decomposition has exactly
/// 2m+1 summands, n = 1..N. For m = 0 this is n_n.
std::vector<mpz_class> count_so_m(int N, int m);

/// N(z) truncated at the given order (coefficient 0 at z^0).
TruncatedSeries nso_series(int order);

mpz_class factorial(int n);

}  // namespace soperm
