#pragma once

#include <gmpxx.h>

#include <vector>

#include "soperm/asymptotics.hpp"
#include "soperm/permutation.hpp"

namespace soperm {

/// Indecomposable counts i_1..i_N, from I(z) = 1 - 1/P(z).
std::vector<mpz_class> count_indecomposable(int N);

/// Counts of permutations with exactly two indecomposable parts, [z^n] I(z)^2,
/// for n = 1..N.
std::vector<mpz_class> count_indecomposable_two_part(int N);

/// No proper prefix {1..k} is invariant.
bool is_indecomposable(const Permutation& sigma);

/// No interval of positions of length 2..n-1 maps onto an interval of values.
bool is_simple(const Permutation& sigma);

/// Simple-permutation counts m_4..m_N, solved order by order from
/// (F - F^2)/(1 + F) = z + M(F(z)) with F(z) = P(z) - 1.
std::vector<mpz_class> count_simple(int N);

/// 1 - sum_{k=1}^{r-1} (2 i_k - i_k^(2)) / n^(k), exact.
Rational eval_indecomposable_expansion(int n, int r);

/// Numeric truncation of the simple-permutation expansion,
/// e^-2 (1 - 4/n + 2/n^(2) - 40/(3 n^(3)) - 182/(3 n^(4))).
/// The only floating-point formula in the library.
double eval_simple_expansion(int n);

}  // namespace soperm
