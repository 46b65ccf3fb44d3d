#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "soperm/patterns.hpp"
#include "soperm/permutation.hpp"

namespace soperm {

/// Exhaustive classification of S_n. All tallies fit in 64 bits up to n = 13.
struct ClassificationReport {
    int n = 0;
    std::uint64_t total = 0;
    std::uint64_t so_count = 0;
    std::uint64_t nso_count = 0;
    std::map<int, std::uint64_t> block_histogram;  // (2m+1) -> count
    std::map<int, std::uint64_t> range_histogram;  // minimal range -> count
};

struct SampleEstimate {
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double estimate = 0.0;
    double stderr_ = 0.0;
    std::uint64_t seed = 0;
};

/// Which event a Monte-Carlo run counts.
struct SampleEvent {
    enum class Kind { so, block_count, pattern_occurrences } kind;
    int m = 0;              // block_count: decomposition has 2m+1 summands
    Permutation pattern;    // pattern_occurrences: pi with exactly m hits

    static SampleEvent self_overlapping();
    static SampleEvent blocks(int m);
    static SampleEvent pattern_occurrence(Permutation pi, int m);
};

inline constexpr int kDefaultEnumerationCap = 11;
inline constexpr int kHardEnumerationCap = 13;

/// Iterates all of S_n in lexicographic order, partitioned across workers by
/// first-element blocks; the result is independent of the worker count.
ClassificationReport enumerate_classify(int n, int workers, int max_n = kDefaultEnumerationCap);

/// Counts a_{n,m}(pi) by window-scanning every permutation of S_n.
PatternCountTable brute_pattern_table(const Permutation& pi, int n, int workers,
                                      int max_n = kDefaultEnumerationCap);

/// Deterministic uniform permutation: Fisher-Yates driven by std::mt19937_64
/// with rejection sampling for the bounded draws, so the output is
/// bit-reproducible across platforms for a fixed (n, seed).
Permutation sample_uniform(int n, std::uint64_t seed);

SampleEstimate estimate_probability(const SampleEvent& event, int n,
                                    std::uint64_t samples, std::uint64_t seed);

}  // namespace soperm
