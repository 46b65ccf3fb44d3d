#pragma once

#include <gmpxx.h>

#include <map>

#include "soperm/asymptotics.hpp"
#include "soperm/permutation.hpp"

namespace soperm {

/// A very-tight pattern with its eligibility (pi and reverse(pi) both
/// non-self-overlapping), recomputed on construction.
struct PatternSpec {
    Permutation pattern;
    bool eligible = false;

    explicit PatternSpec(Permutation pi);
};

/// Counts a_{n,m}(pi) for one host size n.
struct PatternCountTable {
    int n = 0;
    std::map<int, mpz_class> counts;  // m -> a_{n,m}
};

/// Number of windows of sigma whose values are consecutive integers forming
/// the pattern pi (sigma_{i+j} = pi_j + h for some shift h).
long count_very_tight_occurrences(const Permutation& sigma, const Permutation& pi);

bool is_eligible(const Permutation& pi);

/// Myers' exact count of size-n permutations with exactly m very tight
/// occurrences of pi. Requires an eligible pattern of size >= 3.
mpz_class myers_count(const PatternSpec& pi, int n, int m);

/// Truncation of the p-dependent expansion:
/// (1/m!) sum_{k=m}^{r-1} (-1)^{k-m}/(k-m)! (n-(p-1)k)^(k) / n^((p-1)k).
Rational eval_pattern_expansion_1(int p, int m, int n, int r);

/// Coefficients c_k of the 1/n^(k) expansion, via the closed form.
FactorialExpansion pattern_expansion_coefficients(int p, int m, int r);

/// Same coefficients derived independently: each term of the p-dependent
/// expansion is expanded over 1/n^(s) via the factorial identity and the
/// contributions regrouped by s. Cross-checks pattern_expansion_coefficients.
FactorialExpansion rebase_expansion_via_lemma(int p, int m, int r);

/// myers_count / n!, exact.
Rational exact_pattern_probability(const PatternSpec& pi, int n, int m);

}  // namespace soperm
