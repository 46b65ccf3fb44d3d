#include "soperm/asymptotics.hpp"

namespace soperm {

mpz_class factorial_power(long n, int k, FactorialDirection direction) {
    if (k < 0) throw NegativeExponent("factorial_power: k < 0");
    mpz_class out = 1;
    for (int i = 0; i < k; ++i) {
        out *= (direction == FactorialDirection::falling) ? (n - i) : (n + i);
    }
    return out;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

Rational exact_so_probability(int n) {
    const std::vector<mpz_class> so = count_so(n);
    Rational q(so.back(), factorial(n));
    q.canonicalize();
    return q;
}

namespace {

Rational expansion_sum(int n, int r, const std::vector<mpz_class>& numerators) {
    // numerators[k-1] sits over n^(2k), k = 1..r-1.
    if (r < 1) throw BadRange("expansion order r must be >= 1");
    if (n < 2 * (r - 1)) {
        throw DegenerateBasis("n^(2k) vanishes: need n >= 2(r-1)");
    }
    Rational acc = 0;
    for (int k = 1; k <= r - 1; ++k) {
        Rational term(numerators[static_cast<std::size_t>(k - 1)],
                      factorial_power(n, 2 * k, FactorialDirection::falling));
        term.canonicalize();
        acc += term;
    }
    return acc;
}

}  // namespace

Rational eval_so_expansion(int n, int r) {
    const std::vector<mpz_class> nso = count_nso(std::max(1, r - 1));
    return expansion_sum(n, r, nso);
}

Rational eval_so_m_expansion(int n, int m, int r) {
    if (m < 1) throw BadRange("eval_so_m_expansion: m must be >= 1");
    const int N = std::max(1, r - 1);
    const std::vector<mpz_class> a = count_nso_m(N, m);
    const std::vector<mpz_class> b = count_nso_m(N, m + 1);
    std::vector<mpz_class> nums;
    for (int k = 1; k <= N; ++k) {
        nums.push_back(a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]);
    }
    return expansion_sum(n, r, nums);
}

Rational remainder_diagnostic(int n, int r) {
    if (n < 2 * r) throw DegenerateBasis("remainder_diagnostic: need n >= 2r");
    Rational diff = exact_so_probability(n) - eval_so_expansion(n, r);
    diff *= Rational(factorial_power(n, 2 * r, FactorialDirection::falling));
    diff.canonicalize();
    return diff;
}

bool verify_factorial_identity(int n, int k, int l) {
    const mpz_class lhs =
        factorial_power(static_cast<long>(n) - k, l, FactorialDirection::rising);
    Rational rhs = 0;
    for (int i = 0; i <= l; ++i) {
        mpz_class num = factorial_power(k, i, FactorialDirection::falling) *
                        factorial_power(l, i, FactorialDirection::falling) *
                        factorial_power(n, l - i, FactorialDirection::rising);
        if (i % 2) num = -num;
        Rational term(num, factorial(i));
        term.canonicalize();
        rhs += term;
    }
    return rhs == Rational(lhs);
}

}  // namespace soperm
