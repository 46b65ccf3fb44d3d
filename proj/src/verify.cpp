#include "soperm/verify.hpp"

#include <algorithm>
#include <numeric>
#include <span>

#include "soperm/families.hpp"
#include "soperm/oracle.hpp"
#include "soperm/series.hpp"

namespace soperm {

namespace {

long count_decompositions_rec(std::span<const int> values, int shift) {
    const int len = static_cast<int>(values.size());
    if (len == 0) return 1;  // prefix exhausted, empty middle
    std::vector<int> local(values.begin(), values.end());
    for (int& v : local) v -= shift;
    const Permutation window{local};
    long total = is_self_overlapping(window) ? 0 : 1;  // middle = window
    for (int k = 1; 2 * k <= len; ++k) {
        bool boundary = true;
        for (int j = 0; j < k && boundary; ++j) {
            boundary = local[static_cast<std::size_t>(j)] <= k &&
                       local[static_cast<std::size_t>(len - k + j)] ==
                           local[static_cast<std::size_t>(j)] + (len - k);
        }
        if (!boundary) continue;
        const Permutation block{
            std::vector<int>(local.begin(), local.begin() + k)};
        if (is_self_overlapping(block)) continue;
        total += count_decompositions_rec(
            std::span<const int>(values.data() + k,
                                 static_cast<std::size_t>(len - 2 * k)),
            shift + k);
    }
    return total;
}

template <typename Fn>
void for_each_permutation(int n, Fn fn) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        fn(Permutation{v});
    } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace

long count_palindromic_decompositions(const Permutation& sigma) {
    return count_decompositions_rec(
        std::span<const int>(sigma.values().data(), sigma.size()), 0);
}

std::vector<int> literal_overlap_ranges(const Permutation& sigma) {
    const auto& s = sigma.values();
    const int n = static_cast<int>(s.size());
    std::vector<int> ranges;
    for (int k = 1; k < n; ++k) {
        bool cond1 = true, cond2 = true;
        for (int j = 0; j < k; ++j) {
            cond1 = cond1 && s[static_cast<std::size_t>(j)] <= k;
            cond2 = cond2 && s[static_cast<std::size_t>(n - k + j)] > n - k;
        }
        if (!cond1 || !cond2) continue;
        if (is_isomorphic(std::span<const int>(s.data(), static_cast<std::size_t>(k)),
                          std::span<const int>(s.data() + (n - k),
                                               static_cast<std::size_t>(k)))) {
            ranges.push_back(k);
        }
    }
    return ranges;
}

std::vector<Permutation> eligible_patterns(int p) {
    std::vector<Permutation> out;
    for_each_permutation(p, [&](const Permutation& pi) {
        if (is_eligible(pi)) out.push_back(pi);
    });
    return out;
}

VerifyResult verify_core(int max_n, int unique_max_n) {
    VerifyResult r;
    for (int n = 1; n <= max_n; ++n) {
        for_each_permutation(n, [&](const Permutation& sigma) {
            const OverlapProfile prof = overlap_profile(sigma);
            if (prof.ranges != literal_overlap_ranges(sigma)) {
                r.fail("shift detection disagrees with literal definition at " +
                       sigma.str());
            }
            if (prof.is_self_overlapping) {
                if (2 * prof.minimal > n) {
                    r.fail("minimal range above n/2 at " + sigma.str());
                }
                if (sigma.at(1) >= sigma.at(static_cast<std::size_t>(n))) {
                    r.fail("self-overlapping with sigma_1 >= sigma_n at " +
                           sigma.str());
                }
            }
            const PalindromicDecomposition d = decompose(sigma);
            if (reconstruct(d) != sigma) {
                r.fail("round trip failed at " + sigma.str());
            }
            for (const Permutation& b : d.prefix) {
                if (b.empty() || is_self_overlapping(b)) {
                    r.fail("prefix block not a nonempty NSO at " + sigma.str());
                }
            }
            if (!d.middle.empty() && is_self_overlapping(d.middle)) {
                r.fail("middle self-overlapping at " + sigma.str());
            }
            if (n <= unique_max_n &&
                count_palindromic_decompositions(sigma) != 1) {
                r.fail("decomposition not unique at " + sigma.str());
            }
        });
    }
    return r;
}

VerifyResult verify_genfunc(int max_n, int workers) {
    VerifyResult r;
    const std::vector<mpz_class> so = count_so(max_n);
    const std::vector<mpz_class> nso = count_nso(max_n);
    for (int n = 1; n <= max_n; ++n) {
        const ClassificationReport rep =
            enumerate_classify(n, workers, kHardEnumerationCap);
        if (mpz_class(static_cast<unsigned long>(rep.so_count)) !=
            so[static_cast<std::size_t>(n - 1)]) {
            r.fail("so_count mismatch at n=" + std::to_string(n));
        }
        if (mpz_class(static_cast<unsigned long>(rep.nso_count)) !=
            nso[static_cast<std::size_t>(n - 1)]) {
            r.fail("nso_count mismatch at n=" + std::to_string(n));
        }
        for (int m = 0; 2 * m + 1 <= n + 1; ++m) {
            const std::vector<mpz_class> som = count_so_m(n, m);
            auto it = rep.block_histogram.find(2 * m + 1);
            const std::uint64_t observed =
                it == rep.block_histogram.end() ? 0 : it->second;
            if (mpz_class(static_cast<unsigned long>(observed)) !=
                som[static_cast<std::size_t>(n - 1)]) {
                r.fail("block histogram mismatch at n=" + std::to_string(n) +
                       " m=" + std::to_string(m));
            }
        }
        for (auto [range, count] : rep.range_histogram) {
            if (2 * range > n) {
                r.fail("minimal range above n/2 observed at n=" +
                       std::to_string(n));
            }
        }
    }
    return r;
}

VerifyResult verify_patterns(int max_n, int workers) {
    VerifyResult r;
    for (int p : {3, 4}) {
        for (const Permutation& pi : eligible_patterns(p)) {
            const PatternSpec spec{pi};
            for (int n = p; n <= max_n; ++n) {
                const PatternCountTable brute =
                    brute_pattern_table(pi, n, workers, kHardEnumerationCap);
                for (int m = 0; m <= n / (p - 1); ++m) {
                    auto it = brute.counts.find(m);
                    const mpz_class observed =
                        it == brute.counts.end() ? mpz_class(0) : it->second;
                    if (myers_count(spec, n, m) != observed) {
                        r.fail("Myers mismatch for pi=" + pi.str() +
                               " n=" + std::to_string(n) +
                               " m=" + std::to_string(m));
                    }
                }
            }
        }
    }
    return r;
}

VerifyResult verify_families(int max_n) {
    VerifyResult r;
    std::vector<mpz_class> ind_brute, two_brute, simple_brute;
    for (int n = 1; n <= max_n; ++n) {
        mpz_class ind = 0, two = 0, simple = 0;
        for_each_permutation(n, [&](const Permutation& sigma) {
            if (is_indecomposable(sigma)) ++ind;
            if (is_simple(sigma) && n >= 4) ++simple;
            // Exactly two indecomposable parts: a unique split point exists.
            int parts = 0, max_seen = 0;
            for (int i = 1; i <= n; ++i) {
                max_seen = std::max(max_seen, sigma.at(static_cast<std::size_t>(i)));
                if (max_seen == i) ++parts;
            }
            if (parts == 2) ++two;
        });
        ind_brute.push_back(ind);
        two_brute.push_back(two);
        if (n >= 4) simple_brute.push_back(simple);
    }
    VerifyResult a = verify_sequences("indecomposable", count_indecomposable(max_n),
                                      ind_brute);
    VerifyResult b = verify_sequences("indecomposable-two-part",
                                      count_indecomposable_two_part(max_n), two_brute);
    VerifyResult c = max_n >= 4
                         ? verify_sequences("simple", count_simple(max_n), simple_brute)
                         : VerifyResult{};
    for (const VerifyResult* part : {&a, &b, &c}) {
        for (const std::string& f : part->failures) r.fail(f);
    }
    return r;
}

VerifyResult verify_sequences(const std::string& label,
                              const std::vector<mpz_class>& got,
                              const std::vector<mpz_class>& expected) {
    VerifyResult r;
    if (got.size() != expected.size()) {
        r.fail(label + ": length mismatch");
        return r;
    }
    for (std::size_t i = 0; i < got.size(); ++i) {
        if (got[i] != expected[i]) {
            r.fail(label + ": mismatch at index " + std::to_string(i) + " (" +
                   got[i].get_str() + " vs " + expected[i].get_str() + ")");
        }
    }
    return r;
}

}  // namespace soperm
