#include "soperm/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

namespace soperm {

namespace {

// Minimal overlapping range of the window values[0..len), or 0 if none.
// Same check as overlap_profile, on raw storage to keep enumeration cheap.
int minimal_range(const int* s, int len, int value_shift) {
    for (int k = 1; 2 * k <= len; ++k) {
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            ok = s[j] - value_shift <= k &&
                 s[len - k + j] == s[j] + (len - k);
        }
        if (ok) return k;
    }
    // Lemma 2.1: a self-overlapping window admits a range <= len/2, so
    // stopping at len/2 still detects every self-overlapping permutation.
    return 0;
}

// Number of summands of the palindromic decomposition, plus the minimal
// overlapping range of the whole permutation (0 for non-self-overlapping).
struct Classified {
    int blocks;
    int min_range;
};

Classified classify(const std::vector<int>& perm) {
    int lo = 0;
    int len = static_cast<int>(perm.size());
    int blocks = 1;
    int first = 0;
    while (len > 0) {
        const int k = minimal_range(perm.data() + lo, len, lo);
        if (k == 0) break;
        if (first == 0) first = k;
        blocks += 2;
        lo += k;
        len -= 2 * k;
    }
    // The possibly-empty middle counts as one summand, so blocks = 2m + 1.
    return {blocks, first};
}

void check_cap(int n, int max_n) {
    if (n < 1 || n > max_n || n > kHardEnumerationCap) {
        throw SizeCapExceeded("enumeration size " + std::to_string(n) +
                              " exceeds cap " + std::to_string(std::min(max_n, kHardEnumerationCap)));
    }
}

// Runs fn(first_value_block) for blocks 0..n-1 on the requested number of
// threads. Each block covers the permutations starting with value block+1.
template <typename Fn>
void run_blocks(int n, int workers, Fn fn) {
    workers = std::max(1, std::min(workers, n));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int b = next.fetch_add(1); b < n; b = next.fetch_add(1)) fn(b);
    };
    if (workers == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// Iterates all permutations of S_n starting with first+1, lexicographically.
template <typename Visit>
void for_each_in_block(int n, int first, Visit visit) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    perm[0] = first + 1;
    int fill = 1;
    for (int v = 1; v <= n; ++v) {
        if (v != first + 1) perm[static_cast<std::size_t>(fill++)] = v;
    }
    do {
        visit(perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
}

std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t x;
    do {
        x = gen();
    } while (x < threshold);
    return x % bound;
}

void shuffle_identity(std::vector<int>& a, std::mt19937_64& gen) {
    std::iota(a.begin(), a.end(), 1);
    for (std::size_t i = a.size(); i >= 2; --i) {
        const std::uint64_t j = bounded_draw(gen, i);
        std::swap(a[i - 1], a[static_cast<std::size_t>(j)]);
    }
}

}  // namespace

ClassificationReport enumerate_classify(int n, int workers, int max_n) {
    check_cap(n, max_n);
    std::vector<ClassificationReport> parts(static_cast<std::size_t>(n));
    run_blocks(n, workers, [&](int b) {
        ClassificationReport& r = parts[static_cast<std::size_t>(b)];
        for_each_in_block(n, b, [&](const std::vector<int>& perm) {
            const Classified c = classify(perm);
            ++r.total;
            if (c.min_range > 0) {
                ++r.so_count;
                ++r.range_histogram[c.min_range];
            } else {
                ++r.nso_count;
            }
            ++r.block_histogram[c.blocks];
        });
    });
    ClassificationReport out;
    out.n = n;
    for (const ClassificationReport& r : parts) {
        out.total += r.total;
        out.so_count += r.so_count;
        out.nso_count += r.nso_count;
        for (auto [k, v] : r.block_histogram) out.block_histogram[k] += v;
        for (auto [k, v] : r.range_histogram) out.range_histogram[k] += v;
    }
    return out;
}

PatternCountTable brute_pattern_table(const Permutation& pi, int n, int workers,
                                      int max_n) {
    check_cap(n, max_n);
    if (static_cast<int>(pi.size()) > n) {
        throw PatternLargerThanHost("pattern larger than host size");
    }
    const auto& pat = pi.values();
    const int p = static_cast<int>(pat.size());
    std::vector<std::map<int, std::uint64_t>> parts(static_cast<std::size_t>(n));
    run_blocks(n, workers, [&](int b) {
        auto& tally = parts[static_cast<std::size_t>(b)];
        for_each_in_block(n, b, [&](const std::vector<int>& s) {
            int hits = 0;
            for (int i = 0; i + p <= n; ++i) {
                const int h = *std::min_element(s.begin() + i, s.begin() + i + p) - 1;
                bool ok = true;
                for (int j = 0; j < p && ok; ++j) ok = s[static_cast<std::size_t>(i + j)] == pat[static_cast<std::size_t>(j)] + h;
                if (ok) ++hits;
            }
            ++tally[hits];
        });
    });
    PatternCountTable out;
    out.n = n;
    for (const auto& tally : parts) {
        for (auto [m, v] : tally) out.counts[m] += v;
    }
    return out;
}

SampleEvent SampleEvent::self_overlapping() {
    return {Kind::so, 0, {}};
}

SampleEvent SampleEvent::blocks(int m) {
    return {Kind::block_count, m, {}};
}

SampleEvent SampleEvent::pattern_occurrence(Permutation pi, int m) {
    return {Kind::pattern_occurrences, m, std::move(pi)};
}

Permutation sample_uniform(int n, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<int> a(static_cast<std::size_t>(n));
    shuffle_identity(a, gen);
    return Permutation(std::move(a));
}

SampleEstimate estimate_probability(const SampleEvent& event, int n,
                                    std::uint64_t samples, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::uint64_t hits = 0;
    for (std::uint64_t s = 0; s < samples; ++s) {
        shuffle_identity(a, gen);
        bool hit = false;
        switch (event.kind) {
            case SampleEvent::Kind::so:
                hit = minimal_range(a.data(), n, 0) > 0;
                break;
            case SampleEvent::Kind::block_count:
                hit = classify(a).blocks == 2 * event.m + 1;
                break;
            case SampleEvent::Kind::pattern_occurrences:
                hit = count_very_tight_occurrences(Permutation(a), event.pattern) ==
                      event.m;
                break;
        }
        if (hit) ++hits;
    }
    SampleEstimate est;
    est.samples = samples;
    est.hits = hits;
    est.seed = seed;
    est.estimate = samples ? static_cast<double>(hits) / static_cast<double>(samples) : 0.0;
    est.stderr_ = samples
                      ? std::sqrt(est.estimate * (1.0 - est.estimate) /
                                  static_cast<double>(samples))
                      : 0.0;
    return est;
}

}  // namespace soperm
