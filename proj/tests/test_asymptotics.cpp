#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soperm/asymptotics.hpp"

using namespace soperm;

namespace {

Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("factorial_power") {
    CHECK(factorial_power(5, 3, FactorialDirection::falling) == 60);
    CHECK(factorial_power(7, 0, FactorialDirection::rising) == 1);
    CHECK(factorial_power(3, 5, FactorialDirection::falling) == 0);
    CHECK(factorial_power(3, 4, FactorialDirection::rising) == 3 * 4 * 5 * 6);
    CHECK_THROWS_AS(factorial_power(3, -1, FactorialDirection::falling),
                    NegativeExponent);
}

TEST_CASE("exact_so_probability") {
    CHECK(exact_so_probability(2) == ratio(1, 2));
    CHECK(exact_so_probability(4) == ratio(1, 8));
    CHECK(exact_so_probability(6) == ratio(31, 720));
}

TEST_CASE("eval_so_expansion") {
    CHECK(eval_so_expansion(4, 2) == ratio(1, 12));  // n_1 / 4^(2)
    CHECK(eval_so_expansion(100, 1) == 0);

    // With r - 1 = n/2 the truncation IS the exact sum.
    for (int n = 2; n <= 20; n += 2) {
        CHECK(eval_so_expansion(n, n / 2 + 1) == exact_so_probability(n));
    }
    CHECK_THROWS_AS(eval_so_expansion(4, 4), DegenerateBasis);
}

TEST_CASE("exact-sum identity for n <= 40") {
    for (int n = 1; n <= 40; ++n) {
        Rational acc = 0;
        const std::vector<mpz_class> nso = count_nso(std::max(1, n / 2));
        for (int k = 1; 2 * k <= n; ++k) {
            Rational term(nso[static_cast<std::size_t>(k - 1)],
                          factorial_power(n, 2 * k, FactorialDirection::falling));
            term.canonicalize();
            acc += term;
        }
        CHECK(acc == exact_so_probability(n));
    }
}

TEST_CASE("eval_so_m_expansion") {
    CHECK(eval_so_m_expansion(6, 1, 2) == ratio(1, 30));

    // Exhausting the basis reproduces s_n^(m)/n! exactly.
    CHECK(eval_so_m_expansion(4, 1, 3) == ratio(2, 24));
    CHECK(eval_so_m_expansion(4, 2, 3) == ratio(1, 24));
    CHECK_THROWS_AS(eval_so_m_expansion(4, 0, 2), BadRange);
}

TEST_CASE("remainder_diagnostic") {
    // Single-term exact sum at the boundary.
    CHECK(remainder_diagnostic(2, 1) == 1);

    // Approaches n_1 = 1 as n grows.
    const Rational d10 = remainder_diagnostic(10, 1);
    CHECK(abs(d10 - 1) < ratio(1, 5));
    const Rational d40 = remainder_diagnostic(40, 1);
    CHECK(abs(d40 - 1) < ratio(1, 100));

    // r = 3 at n = 100: within 1% of n_3 = 5.
    const Rational d = remainder_diagnostic(100, 3);
    CHECK(abs(d - 5) < ratio(5, 100));

    CHECK_THROWS_AS(remainder_diagnostic(5, 3), DegenerateBasis);
}

TEST_CASE("truncation error stays within [0, n_r + 1] and converges") {
    const std::vector<mpz_class> nso = count_nso(4);
    for (int r = 1; r <= 4; ++r) {
        const mpz_class nr = nso[static_cast<std::size_t>(r - 1)];
        // Nonnegative everywhere; the n_r + 1 envelope needs n somewhat past
        // the basis boundary (at n = 2r + 2 the diagnostic is n_r + n_{r+1}/2).
        for (int n = 2 * r; n <= 100; n += (n < 20 ? 2 : 20)) {
            CHECK(remainder_diagnostic(n, r) >= 0);
        }
        for (int n = 5 * r; n <= 100; n += (n < 20 ? 1 : 20)) {
            CHECK(remainder_diagnostic(n, r) <= Rational(nr + 1));
        }
        CHECK(abs(remainder_diagnostic(50, r) - Rational(nr)) <=
              Rational(nr) * ratio(5, 100));
        CHECK(abs(remainder_diagnostic(100, r) - Rational(nr)) <=
              Rational(nr) * ratio(1, 100));
    }
}

TEST_CASE("factorial identity") {
    CHECK(verify_factorial_identity(7, 0, 4));
    CHECK(verify_factorial_identity(9, 3, 1));
    for (int n = 0; n <= 12; ++n) {
        for (int k = 0; k <= 12; ++k) {
            for (int l = 0; l <= 12; ++l) {
                CHECK(verify_factorial_identity(n, k, l));
            }
        }
    }
}
