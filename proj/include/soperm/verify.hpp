#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "soperm/permutation.hpp"

namespace soperm {

struct VerifyResult {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string message) {
        ok = false;
        failures.push_back(std::move(message));
    }
};

/// Number of palindromic decompositions of sigma into non-self-overlapping
/// blocks (middle non-self-overlapping or empty). The decomposition theorem
/// says this is exactly 1; used as the uniqueness oracle.
long count_palindromic_decompositions(const Permutation& sigma);

/// Overlap ranges computed from the literal three-condition definition
/// (interval invariance plus generic pattern isomorphism), with no shift
/// shortcut. Cross-checks overlap_profile.
std::vector<int> literal_overlap_ranges(const Permutation& sigma);

/// All eligible patterns of size p (both pi and reverse(pi) non-self-overlapping).
std::vector<Permutation> eligible_patterns(int p);

/// Structural checks on perm-core over all of S_n, n <= max_n:
/// round trip, block minimality, sigma_1 < sigma_n for self-overlapping,
/// minimal range <= n/2, shift vs literal detection, uniqueness (n <= unique_max_n).
VerifyResult verify_core(int max_n, int unique_max_n = 8);

/// enumerate_classify vs count_so / count_nso / count_so_m, n <= max_n.
VerifyResult verify_genfunc(int max_n, int workers);

/// myers_count vs brute_pattern_table for all eligible size-3 and size-4
/// patterns, hosts up to max_n.
VerifyResult verify_patterns(int max_n, int workers);

/// Indecomposable and simple counting sequences vs definitional brute force.
VerifyResult verify_families(int max_n);

/// Elementwise comparison of a computed sequence against a reference;
/// mismatches are reported with their index. Used by the suites and by the
/// mutation smoke test.
VerifyResult verify_sequences(const std::string& label,
                              const std::vector<mpz_class>& got,
                              const std::vector<mpz_class>& expected);

}  // namespace soperm
