#include "soperm/patterns.hpp"

#include <algorithm>

namespace soperm {

PatternSpec::PatternSpec(Permutation pi)
    : pattern(std::move(pi)), eligible(is_eligible(pattern)) {}

bool is_eligible(const Permutation& pi) {
    return !is_self_overlapping(pi) && !is_self_overlapping(reverse(pi));
}

long count_very_tight_occurrences(const Permutation& sigma, const Permutation& pi) {
    const int n = static_cast<int>(sigma.size());
    const int p = static_cast<int>(pi.size());
    if (p > n) throw PatternLargerThanHost("pattern larger than host");
    const auto& s = sigma.values();
    const auto& pat = pi.values();
    long hits = 0;
    for (int i = 0; i + p <= n; ++i) {
        const int h = *std::min_element(s.begin() + i, s.begin() + i + p) - 1;
        bool ok = true;
        for (int j = 0; j < p && ok; ++j) {
            ok = s[static_cast<std::size_t>(i + j)] ==
                 pat[static_cast<std::size_t>(j)] + h;
        }
        if (ok) ++hits;
    }
    return hits;
}

namespace {

void require_eligible_p3(const PatternSpec& pi) {
    if (!pi.eligible || pi.pattern.size() < 3) {
        throw IneligiblePattern(
            "pattern and its reverse must be non-self-overlapping, size >= 3");
    }
}

}  // namespace

mpz_class myers_count(const PatternSpec& pi, int n, int m) {
    require_eligible_p3(pi);
    const int p = static_cast<int>(pi.pattern.size());
    const int kmax = n / (p - 1);
    if (m < 0 || m > kmax) return 0;
    mpz_class acc = 0;
    for (int k = m; k <= kmax; ++k) {
        mpz_class term = binomial(k, m) * binomial(n - (p - 1) * k, k) *
                         factorial(n - (p - 1) * k);
        if ((k - m) % 2) term = -term;  // (-1)^{m-k} = (-1)^{k-m}
        acc += term;
    }
    return acc;
}

Rational eval_pattern_expansion_1(int p, int m, int n, int r) {
    if (p < 3 || m < 0 || r <= m) throw BadRange("need p >= 3, 0 <= m < r");
    if (n < (p - 1) * (r - 1)) {
        throw DegenerateBasis("n^((p-1)k) vanishes: need n >= (p-1)(r-1)");
    }
    Rational acc = 0;
    for (int k = m; k <= r - 1; ++k) {
        mpz_class num = factorial_power(static_cast<long>(n) - (p - 1) * k, k,
                                        FactorialDirection::falling);
        if ((k - m) % 2) num = -num;
        Rational term(num, factorial(k - m) *
                               factorial_power(n, (p - 1) * k,
                                               FactorialDirection::falling));
        term.canonicalize();
        acc += term;
    }
    acc /= Rational(factorial(m));
    acc.canonicalize();
    return acc;
}

FactorialExpansion pattern_expansion_coefficients(int p, int m, int r) {
    if (p < 3 || m < 0 || r < 1) throw BadRange("need p >= 3, m >= 0, r >= 1");
    FactorialExpansion out;
    out.remainder_order = r;
    out.basis_step = 1;
    for (int k = (p - 2) * m; k <= r - 1; ++k) {
        Rational c = 0;
        const int ilo = (k + p - 2) / (p - 1);  // ceil(k/(p-1))
        const int ihi = k / (p - 2);
        for (int i = ilo; i <= ihi; ++i) {
            mpz_class num = binomial(i, m) * binomial(i, k - (p - 2) * i);
            if (((p - 1) * i - k) % 2) num = -num;
            Rational term(num, factorial((p - 1) * i - k));
            term.canonicalize();
            c += term;
        }
        if (m % 2) c = -c;
        c.canonicalize();
        out.terms[k] = c;
    }
    return out;
}

FactorialExpansion rebase_expansion_via_lemma(int p, int m, int r) {
    if (p < 3 || m < 0 || r < 1) throw BadRange("need p >= 3, m >= 0, r >= 1");
    FactorialExpansion out;
    out.remainder_order = r;
    out.basis_step = 1;
    for (int k = (p - 2) * m; k <= r - 1; ++k) out.terms[k] = 0;
    // Each k-term of the p-dependent expansion contributes, via the factorial
    // identity, (-1)^i C(k,i) k^(i) / n^((p-2)k+i) for i = 0..k.
    for (int k = m; (p - 2) * k <= r - 1; ++k) {
        Rational outer(mpz_class(1), factorial(m) * factorial(k - m));
        if ((k - m) % 2) outer = -outer;
        outer.canonicalize();
        for (int i = 0; i <= k; ++i) {
            const int s = (p - 2) * k + i;
            if (s > r - 1) break;
            Rational contrib = outer * Rational(binomial(k, i) *
                                                factorial_power(k, i,
                                                                FactorialDirection::falling));
            if (i % 2) contrib = -contrib;
            contrib.canonicalize();
            out.terms[s] += contrib;
        }
    }
    for (auto& [s, c] : out.terms) c.canonicalize();
    return out;
}

Rational exact_pattern_probability(const PatternSpec& pi, int n, int m) {
    Rational q(myers_count(pi, n, m), factorial(n));
    q.canonicalize();
    return q;
}

}  // namespace soperm
