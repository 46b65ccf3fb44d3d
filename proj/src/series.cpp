#include "soperm/series.hpp"

#include <algorithm>

namespace soperm {

TruncatedSeries::TruncatedSeries(int order, std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::permutations(int order) {
    TruncatedSeries p(order);
    mpz_class f = 1;
    p.coeff(0) = 1;
    for (int n = 1; n <= order; ++n) {
        f *= n;
        p.coeff(n) = f;
    }
    return p;
}

TruncatedSeries TruncatedSeries::constant(long c, int order) {
    TruncatedSeries s(order);
    s.coeff(0) = c;
    return s;
}

TruncatedSeries series_multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            out.coeff(i + j) += a.coeff(i) * b.coeff(j);
        }
    }
    return out;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) out.coeff(i) = a.coeff(i) + b.coeff(i);
    return out;
}

TruncatedSeries series_subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int order = std::min(a.order(), b.order());
    TruncatedSeries out(order);
    for (int i = 0; i <= order; ++i) out.coeff(i) = a.coeff(i) - b.coeff(i);
    return out;
}

TruncatedSeries series_substitute_square(const TruncatedSeries& a) {
    TruncatedSeries out(a.order());
    for (int k = 0; 2 * k <= a.order(); ++k) out.coeff(2 * k) = a.coeff(k);
    return out;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
    if (a.coeff(0) != 1 && a.coeff(0) != -1) {
        throw NonUnitConstantTerm("series_reciprocal: constant term must be +-1");
    }
    const int order = a.order();
    TruncatedSeries out(order);
    const mpz_class u = a.coeff(0);  // u == 1/u
    out.coeff(0) = u;
    for (int n = 1; n <= order; ++n) {
        mpz_class acc = 0;
        for (int k = 1; k <= n; ++k) acc += a.coeff(k) * out.coeff(n - k);
        out.coeff(n) = -u * acc;
    }
    return out;
}

mpz_class factorial(int n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

std::vector<mpz_class> count_nso(int N) {
    std::vector<mpz_class> n_seq(static_cast<std::size_t>(N) + 1);
    for (int n = 1; n <= N; ++n) {
        mpz_class v = factorial(n);
        for (int k = 1; 2 * k <= n; ++k) {
            v -= n_seq[static_cast<std::size_t>(k)] * factorial(n - 2 * k);
        }
        n_seq[static_cast<std::size_t>(n)] = v;
    }
    return {n_seq.begin() + 1, n_seq.end()};
}

std::vector<mpz_class> count_so(int N) {
    const std::vector<mpz_class> nso = count_nso(N);
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        mpz_class v = 0;
        for (int k = 1; 2 * k <= n; ++k) {
            v += nso[static_cast<std::size_t>(k - 1)] * factorial(n - 2 * k);
        }
        out.push_back(v);
    }
    return out;
}

TruncatedSeries nso_series(int order) {
    const std::vector<mpz_class> nso = count_nso(order);
    TruncatedSeries s(order);
    for (int n = 1; n <= order; ++n) s.coeff(n) = nso[static_cast<std::size_t>(n - 1)];
    return s;
}

std::vector<mpz_class> count_nso_m(int N, int m) {
    TruncatedSeries pow = TruncatedSeries::constant(1, N);
    if (m > 0) {
        const TruncatedSeries base = nso_series(N);
        for (int i = 0; i < m; ++i) pow = series_multiply(pow, base);
    }
    return pow.coeffs();
}

std::vector<mpz_class> count_so_m(int N, int m) {
    if (m == 0) return count_nso(N);
    const std::vector<mpz_class> a = count_nso_m(N, m);
    const std::vector<mpz_class> b = count_nso_m(N, m + 1);
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        mpz_class v = 0;
        for (int k = 1; 2 * k <= n; ++k) {
            v += (a[static_cast<std::size_t>(k)] - b[static_cast<std::size_t>(k)]) *
                 factorial(n - 2 * k);
        }
        out.push_back(v);
    }
    return out;
}

}  // namespace soperm
