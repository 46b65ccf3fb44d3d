#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soperm/series.hpp"

using namespace soperm;

namespace {

TruncatedSeries make(int order, std::vector<long> coeffs) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        s.coeff(static_cast<int>(i)) = coeffs[i];
    }
    return s;
}

const std::vector<long> kNso = {1, 1, 5, 21, 113, 689, 4909, 39545, 357669, 3587485};
const std::vector<long> kSo = {0, 1, 1, 3, 7, 31, 131, 775, 5211, 41315};

}  // namespace

TEST_CASE("series_multiply") {
    const TruncatedSeries one_plus_z = make(4, {1, 1});
    const TruncatedSeries sq = series_multiply(one_plus_z, one_plus_z);
    CHECK(sq.coeffs() == std::vector<mpz_class>{1, 2, 1, 0, 0});

    const TruncatedSeries a = make(3, {3, 1, 4, 1});
    CHECK(series_multiply(a, TruncatedSeries::constant(1, 3)) == a);

    // [z^4] N(z)^2 with n_k = 1, 1, 5: 2*1*5 + 1*1 = 11.
    const TruncatedSeries n = make(6, {0, 1, 1, 5});
    CHECK(series_multiply(n, n).coeff(4) == 11);

    // Order contracts to the smaller operand.
    CHECK(series_multiply(make(2, {1}), make(9, {1})).order() == 2);
}

TEST_CASE("series_substitute_square") {
    CHECK(series_substitute_square(make(4, {0, 1, 1})).coeffs() ==
          std::vector<mpz_class>{0, 0, 1, 0, 1});
    CHECK(series_substitute_square(TruncatedSeries::constant(1, 5)) ==
          TruncatedSeries::constant(1, 5));

    const TruncatedSeries n2 = series_substitute_square(nso_series(6));
    CHECK(n2.coeffs() == std::vector<mpz_class>{0, 0, 1, 0, 1, 0, 5});
}

TEST_CASE("series_reciprocal") {
    const TruncatedSeries geom = series_reciprocal(make(5, {1, -1}));
    CHECK(geom.coeffs() == std::vector<mpz_class>{1, 1, 1, 1, 1, 1});

    const TruncatedSeries a = series_subtract(
        TruncatedSeries::constant(1, 10),
        series_substitute_square(nso_series(10)));
    CHECK(series_reciprocal(series_reciprocal(a)) == a);

    CHECK_THROWS_AS(series_reciprocal(make(3, {2, 1})), NonUnitConstantTerm);

    // (1 + N(z)) / (1 - N(z^2)) reproduces the n! coefficients.
    const int order = 8;
    const TruncatedSeries lhs = series_multiply(
        series_add(TruncatedSeries::constant(1, order), nso_series(order)),
        series_reciprocal(series_subtract(
            TruncatedSeries::constant(1, order),
            series_substitute_square(nso_series(order)))));
    CHECK(lhs == TruncatedSeries::permutations(order));
}

TEST_CASE("count_nso") {
    const std::vector<mpz_class> n = count_nso(10);
    REQUIRE(n.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(n[i] == kNso[i]);
    CHECK(count_nso(1) == std::vector<mpz_class>{1});
    CHECK(count_nso(2)[1] == 1);  // 2! - n_1 * 0!
}

TEST_CASE("count_so") {
    const std::vector<mpz_class> s = count_so(10);
    REQUIRE(s.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) CHECK(s[i] == kSo[i]);
    CHECK(s[5] == 24 + 2 + 5);  // n_1*4! + n_2*2! + n_3*0!
    const std::vector<mpz_class> n = count_nso(10);
    for (int i = 0; i < 10; ++i) {
        CHECK(s[static_cast<std::size_t>(i)] + n[static_cast<std::size_t>(i)] ==
              factorial(i + 1));
    }
}

TEST_CASE("count_nso_m") {
    const std::vector<mpz_class> m0 = count_nso_m(6, 0);
    CHECK(m0[0] == 1);
    for (std::size_t i = 1; i < m0.size(); ++i) CHECK(m0[i] == 0);

    const std::vector<mpz_class> m1 = count_nso_m(6, 1);
    CHECK(m1[0] == 0);
    CHECK(m1[3] == 5);

    CHECK(count_nso_m(6, 2)[4] == 11);
}

TEST_CASE("count_so_m") {
    CHECK(count_so_m(4, 1)[3] == 2);  // 1324 and 2143
    CHECK(count_so_m(4, 2)[3] == 1);  // 1234
    CHECK(count_so_m(5, 0) == count_nso(5));

    // Every permutation has exactly one block count.
    for (int n = 1; n <= 9; ++n) {
        mpz_class total = 0;
        for (int m = 0; 2 * m <= n; ++m) {
            total += count_so_m(n, m)[static_cast<std::size_t>(n - 1)];
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("series identities to order 20") {
    const int order = 20;
    const TruncatedSeries p = TruncatedSeries::permutations(order);
    const TruncatedSeries n = nso_series(order);
    const TruncatedSeries n2 = series_substitute_square(n);
    const TruncatedSeries one = TruncatedSeries::constant(1, order);

    TruncatedSeries s(order);
    const std::vector<mpz_class> so = count_so(order);
    for (int i = 1; i <= order; ++i) s.coeff(i) = so[static_cast<std::size_t>(i - 1)];

    // 1 + S + N = P.
    CHECK(series_add(one, series_add(s, n)) == p);
    // S = (1 + N)/(1 - N(z^2)) * N(z^2).
    CHECK(series_multiply(series_multiply(series_add(one, n),
                                          series_reciprocal(series_subtract(one, n2))),
                          n2) == s);
    // (1 + N) * (1 - N(z^2))^-1 = P.
    CHECK(series_multiply(series_add(one, n),
                          series_reciprocal(series_subtract(one, n2))) == p);
}

TEST_CASE("convolution consistency of count_nso_m") {
    const int N = 12;
    const TruncatedSeries n = nso_series(N);
    for (int m = 0; m <= 4; ++m) {
        const TruncatedSeries cur(N, count_nso_m(N, m));
        CHECK(series_multiply(n, cur).coeffs() == count_nso_m(N, m + 1));
    }
}
