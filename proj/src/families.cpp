#include "soperm/families.hpp"

#include <cmath>

#include "soperm/series.hpp"

namespace soperm {

namespace {

TruncatedSeries indecomposable_series(int order) {
    const TruncatedSeries p = TruncatedSeries::permutations(order);
    return series_subtract(TruncatedSeries::constant(1, order),
                           series_reciprocal(p));
}

}  // namespace

std::vector<mpz_class> count_indecomposable(int N) {
    const TruncatedSeries i = indecomposable_series(N);
    return {i.coeffs().begin() + 1, i.coeffs().end()};
}

std::vector<mpz_class> count_indecomposable_two_part(int N) {
    const TruncatedSeries i = indecomposable_series(N);
    const TruncatedSeries sq = series_multiply(i, i);
    return {sq.coeffs().begin() + 1, sq.coeffs().end()};
}

bool is_indecomposable(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    int max_seen = 0;
    for (int i = 1; i < n; ++i) {
        max_seen = std::max(max_seen, sigma.at(static_cast<std::size_t>(i)));
        if (max_seen == i) return false;  // {1..i} invariant
    }
    return true;
}

bool is_simple(const Permutation& sigma) {
    const int n = static_cast<int>(sigma.size());
    for (int i = 1; i <= n; ++i) {
        int lo = sigma.at(static_cast<std::size_t>(i));
        int hi = lo;
        for (int j = i + 1; j <= n; ++j) {
            const int len = j - i + 1;
            if (len == n) break;
            lo = std::min(lo, sigma.at(static_cast<std::size_t>(j)));
            hi = std::max(hi, sigma.at(static_cast<std::size_t>(j)));
            if (hi - lo + 1 == len) return false;  // interval maps onto interval
        }
    }
    return true;
}

std::vector<mpz_class> count_simple(int N) {
    // With F = P - 1 (zero constant term) the defining equation becomes
    // (F - F^2)/(1 + F) = z + M(F(z)), which composes formally. Solve for the
    // m_n order by order; [z^n] F^n = 1 makes each step a plain subtraction.
    const int order = N;
    const TruncatedSeries f = series_subtract(
        TruncatedSeries::permutations(order), TruncatedSeries::constant(1, order));
    TruncatedSeries lhs = series_multiply(
        series_subtract(f, series_multiply(f, f)),
        series_reciprocal(series_add(TruncatedSeries::constant(1, order), f)));
    lhs.coeff(1) -= 1;  // move the z term across

    std::vector<mpz_class> m(static_cast<std::size_t>(N) + 1);
    std::vector<TruncatedSeries> fpow;  // fpow[j-4] = F^j
    TruncatedSeries cur = series_multiply(series_multiply(f, f),
                                          series_multiply(f, f));
    for (int j = 4; j <= N; ++j) {
        fpow.push_back(cur);
        if (j < N) cur = series_multiply(cur, f);
    }
    for (int n = 4; n <= N; ++n) {
        mpz_class v = lhs.coeff(n);
        for (int j = 4; j < n; ++j) {
            v -= m[static_cast<std::size_t>(j)] * fpow[static_cast<std::size_t>(j - 4)].coeff(n);
        }
        m[static_cast<std::size_t>(n)] = v;
    }
    return {m.begin() + 4, m.end()};
}

Rational eval_indecomposable_expansion(int n, int r) {
    if (r < 1) throw BadRange("r must be >= 1");
    if (n < r - 1) throw DegenerateBasis("n^(k) vanishes: need n >= r-1");
    const int N = std::max(1, r - 1);
    const std::vector<mpz_class> ind = count_indecomposable(N);
    const std::vector<mpz_class> two = count_indecomposable_two_part(N);
    Rational acc = 1;
    for (int k = 1; k <= r - 1; ++k) {
        Rational term(2 * ind[static_cast<std::size_t>(k - 1)] -
                          two[static_cast<std::size_t>(k - 1)],
                      factorial_power(n, k, FactorialDirection::falling));
        term.canonicalize();
        acc -= term;
    }
    return acc;
}

double eval_simple_expansion(int n) {
    if (n < 4) throw BadRange("simple-permutation expansion needs n >= 4");
    const double inv_e2 = std::exp(-2.0);
    auto ff = [&](int k) {
        return factorial_power(n, k, FactorialDirection::falling).get_d();
    };
    return inv_e2 * (1.0 - 4.0 / ff(1) + 2.0 / ff(2) - 40.0 / (3.0 * ff(3)) -
                     182.0 / (3.0 * ff(4)));
}

}  // namespace soperm
