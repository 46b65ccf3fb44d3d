#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "soperm/errors.hpp"

namespace soperm {

/// A permutation in one-line notation: values are a bijection onto {1,...,n}.
/// The empty permutation (n = 0) is a valid value.
class Permutation {
public:
    Permutation() = default;

    /// Validates the bijection property; throws NotABijection otherwise.
    explicit Permutation(std::vector<int> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// 1-based access: at(1) = sigma_1.
    int at(std::size_t i) const { return values_[i - 1]; }

    const std::vector<int>& values() const { return values_; }

    static Permutation identity(std::size_t n);

    /// Canonical rendering: space-separated values, "" for the empty permutation.
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

/// All overlapping ranges of a permutation, ascending, plus the minimal one.
struct OverlapProfile {
    std::vector<int> ranges;       // ascending, each in [1, n-1]
    int minimal = 0;               // min(ranges), 0 when not self-overlapping
    bool is_self_overlapping = false;
};

/// sigma = pi_1 + ... + pi_m + tau + pi_m + ... + pi_1 (direct sums),
/// with every pi_i non-self-overlapping and tau non-self-overlapping or empty.
struct PalindromicDecomposition {
    std::vector<Permutation> prefix;
    Permutation middle;
};

/// Parses whitespace/comma-separated values, or a contiguous digit string
/// (the latter only when all values are single digits).
Permutation parse_permutation(std::string_view text);

/// The unique permutation order-isomorphic to a sequence of distinct integers.
Permutation pattern_of(std::span<const int> seq);

/// True iff pattern_of(a) == pattern_of(b).
bool is_isomorphic(std::span<const int> a, std::span<const int> b);

/// Associative fold of the two-argument direct sum; empty blocks act as identities.
Permutation direct_sum(const std::vector<Permutation>& blocks);

Permutation reverse(const Permutation& sigma);

/// All overlapping ranges of sigma per the three-condition definition.
/// Throws EmptyPermutation for n = 0.
OverlapProfile overlap_profile(const Permutation& sigma);

bool is_self_overlapping(const Permutation& sigma);

/// The unique palindromic decomposition into non-self-overlapping blocks,
/// obtained by iteratively stripping the minimal-range prefix block.
PalindromicDecomposition decompose(const Permutation& sigma);

Permutation reconstruct(const PalindromicDecomposition& d);

/// Number of direct summands, 2m + 1; the possibly-empty middle counts as one.
int block_count(const PalindromicDecomposition& d);

}  // namespace soperm
