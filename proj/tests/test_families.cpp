#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "soperm/families.hpp"
#include "soperm/series.hpp"
#include "soperm/verify.hpp"

using namespace soperm;

namespace {

Permutation perm(const char* text) { return parse_permutation(text); }

Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("count_indecomposable") {
    const std::vector<mpz_class> i = count_indecomposable(6);
    CHECK(i == std::vector<mpz_class>{1, 1, 3, 13, 71, 461});

    // Sequence-of-indecomposables identity: [z^n] 1/(1 - I(z)) = n!.
    const int order = 12;
    TruncatedSeries iser(order);
    const std::vector<mpz_class> iv = count_indecomposable(order);
    for (int n = 1; n <= order; ++n) {
        iser.coeff(n) = iv[static_cast<std::size_t>(n - 1)];
    }
    const TruncatedSeries seq = series_reciprocal(
        series_subtract(TruncatedSeries::constant(1, order), iser));
    CHECK(seq == TruncatedSeries::permutations(order));
}

TEST_CASE("count_indecomposable_two_part") {
    const std::vector<mpz_class> two = count_indecomposable_two_part(4);
    CHECK(two[0] == 0);
    CHECK(two[1] == 1);  // only 12 = 1 + 1
    CHECK(two[3] == 7);  // i1*i3 + i2*i2 + i3*i1
}

TEST_CASE("is_indecomposable / is_simple") {
    CHECK(is_indecomposable(perm("21")));
    CHECK_FALSE(is_indecomposable(perm("132")));
    CHECK(is_indecomposable(perm("312")));
    CHECK(is_simple(perm("2413")));
    CHECK(is_simple(perm("3142")));
    CHECK_FALSE(is_simple(perm("1234")));
    CHECK_FALSE(is_simple(perm("2431")));
}

TEST_CASE("count_simple") {
    const std::vector<mpz_class> m = count_simple(9);
    CHECK(m[0] == 2);   // 2413 and 3142
    CHECK(m[1] == 6);
    CHECK(m == std::vector<mpz_class>{2, 6, 46, 338, 2926, 28146});
}

TEST_CASE("families agree with definitional brute force up to n = 8") {
    const VerifyResult r = verify_families(8);
    for (const std::string& f : r.failures) FAIL_CHECK(f);
    CHECK(r.ok);
}

TEST_CASE("eval_indecomposable_expansion") {
    CHECK(eval_indecomposable_expansion(10, 2) == ratio(4, 5));
    CHECK(eval_indecomposable_expansion(7, 1) == 1);

    // Remainder scaling: (exact - truncation) * n^(r) stays bounded.
    for (int r = 1; r <= 3; ++r) {
        for (int n = std::max(4, r); n <= 60; n += 7) {
            const std::vector<mpz_class> ind = count_indecomposable(n);
            Rational exact(ind.back(), factorial(n));
            exact.canonicalize();
            Rational scaled =
                (exact - eval_indecomposable_expansion(n, r)) *
                Rational(factorial_power(n, r, FactorialDirection::falling));
            scaled.canonicalize();
            CHECK(abs(scaled) <= 12);
        }
    }
}

TEST_CASE("eval_simple_expansion") {
    // Truncation tends to e^-2 from the leading term.
    CHECK(eval_simple_expansion(1000000) ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-4));

    // Order-of-magnitude sanity at n = 9 against the exact proportion.
    const double exact = 28146.0 / 362880.0;
    const double approx = eval_simple_expansion(9);
    CHECK(std::abs(exact - approx) < 0.1);
    CHECK_THROWS_AS(eval_simple_expansion(3), BadRange);
}
