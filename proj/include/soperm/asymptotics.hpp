#pragma once

#include <gmpxx.h>

#include <map>

#include "soperm/errors.hpp"
#include "soperm/series.hpp"

namespace soperm {

using Rational = mpq_class;

/// Exact-rational coefficients over the falling-factorial basis 1/n^(k).
/// basis_step = 2 when the k-th term sits over n^(2k), 1 otherwise.
/// remainder_order r means the truncation error is O(1/n^r) in basis units.
struct FactorialExpansion {
    std::map<int, Rational> terms;
    int remainder_order = 0;
    int basis_step = 1;
};

enum class FactorialDirection { falling, rising };

/// n^(k) falling = n(n-1)...(n-k+1); rising = n(n+1)...(n+k-1). k = 0 gives 1.
mpz_class factorial_power(long n, int k, FactorialDirection direction);

mpz_class binomial(long n, long k);

/// P(sigma in S_n is self-overlapping) = s_n/n!, exactly.
Rational exact_so_probability(int n);

/// sum_{k=1}^{r-1} n_k / n^(2k), exact. Requires n >= 2(r-1).
Rational eval_so_expansion(int n, int r);

/// sum_{k=1}^{r-1} (n_k^(m) - n_k^(m+1)) / n^(2k), exact. Requires m >= 1.
Rational eval_so_m_expansion(int n, int m, int r);

/// (exact - truncation at r) * n^(2r); converges to n_r as n grows.
Rational remainder_diagnostic(int n, int r);

/// Checks (n-k)^(l rising) = sum_{i=0}^{l} (-1)^i/i! k^(i) l^(i) n^(l-i rising)
/// with exact rationals.
bool verify_factorial_identity(int n, int k, int l);

}  // namespace soperm
