#include "soperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace soperm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : values_) {
        if (v < 1 || v > n) {
            throw NotABijection("value " + std::to_string(v) + " out of range 1.." +
                                std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw NotABijection("duplicate value " + std::to_string(v));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

std::string Permutation::str() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(values_[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    const bool has_separator =
        text.find_first_of(" \t\n\r,") != std::string_view::npos;
    if (has_separator) {
        std::string buf(text);
        std::replace(buf.begin(), buf.end(), ',', ' ');
        std::istringstream in(buf);
        std::string tok;
        while (in >> tok) {
            std::size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw MalformedToken("not an integer: '" + tok + "'");
            }
            if (pos != tok.size() || v < 1) {
                throw MalformedToken("not a positive integer: '" + tok + "'");
            }
            values.push_back(v);
        }
    } else {
        // Contiguous digit string, one value per digit; valid only when n <= 9.
        for (char c : text) {
            if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
                throw MalformedToken(std::string("bad digit '") + c + "'");
            }
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

Permutation pattern_of(std::span<const int> seq) {
    const std::size_t n = seq.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return seq[a] < seq[b]; });
    for (std::size_t i = 1; i < n; ++i) {
        if (seq[idx[i - 1]] == seq[idx[i]]) {
            throw DuplicateEntry("repeated entry " + std::to_string(seq[idx[i]]));
        }
    }
    std::vector<int> out(n);
    for (std::size_t rank = 0; rank < n; ++rank) {
        out[idx[rank]] = static_cast<int>(rank) + 1;
    }
    return Permutation(std::move(out));
}

bool is_isomorphic(std::span<const int> a, std::span<const int> b) {
    return a.size() == b.size() && pattern_of(a) == pattern_of(b);
}

Permutation direct_sum(const std::vector<Permutation>& blocks) {
    std::vector<int> out;
    int shift = 0;
    for (const Permutation& b : blocks) {
        for (int v : b.values()) out.push_back(v + shift);
        shift += static_cast<int>(b.size());
    }
    return Permutation(std::move(out));
}

Permutation reverse(const Permutation& sigma) {
    std::vector<int> v(sigma.values().rbegin(), sigma.values().rend());
    return Permutation(std::move(v));
}

OverlapProfile overlap_profile(const Permutation& sigma) {
    if (sigma.empty()) {
        throw EmptyPermutation("overlap_profile: empty permutation");
    }
    const auto& s = sigma.values();
    const int n = static_cast<int>(s.size());
    OverlapProfile profile;
    for (int k = 1; k < n; ++k) {
        // Conditions 1 and 2: the first k values fill {1..k} and the last k
        // fill {n-k+1..n}.
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
            ok = s[static_cast<std::size_t>(j)] <= k &&
                 s[static_cast<std::size_t>(n - k + j)] > n - k;
        }
        // Condition 3 via the shift identity: two permutations of consecutive
        // integer intervals are isomorphic iff they are equal up to shift, so
        // given conditions 1-2 isomorphism of the two windows is exactly
        // s[n-k+j] = s[j] + (n-k) for all j.
        for (int j = 0; j < k && ok; ++j) {
            ok = s[static_cast<std::size_t>(n - k + j)] ==
                 s[static_cast<std::size_t>(j)] + (n - k);
        }
        if (ok) profile.ranges.push_back(k);
    }
    profile.is_self_overlapping = !profile.ranges.empty();
    profile.minimal = profile.is_self_overlapping ? profile.ranges.front() : 0;
    return profile;
}

bool is_self_overlapping(const Permutation& sigma) {
    return overlap_profile(sigma).is_self_overlapping;
}

PalindromicDecomposition decompose(const Permutation& sigma) {
    if (sigma.empty()) {
        throw EmptyPermutation("decompose: empty permutation");
    }
    PalindromicDecomposition d;
    std::vector<int> cur = sigma.values();
    while (!cur.empty()) {
        Permutation window{cur};
        OverlapProfile profile = overlap_profile(window);
        if (!profile.is_self_overlapping) {
            d.middle = std::move(window);
            return d;
        }
        // Strip the minimal-range block from both ends; the remaining middle
        // occupies the value interval {k+1..n-k}, shift it back to {1..}.
        const int k = profile.minimal;
        const int len = static_cast<int>(cur.size());
        d.prefix.emplace_back(
            std::vector<int>(cur.begin(), cur.begin() + k));
        std::vector<int> mid(cur.begin() + k, cur.begin() + (len - k));
        for (int& v : mid) v -= k;
        cur = std::move(mid);
    }
    return d;  // middle stays empty
}

Permutation reconstruct(const PalindromicDecomposition& d) {
    std::vector<Permutation> blocks(d.prefix);
    blocks.push_back(d.middle);
    blocks.insert(blocks.end(), d.prefix.rbegin(), d.prefix.rend());
    return direct_sum(blocks);
}

int block_count(const PalindromicDecomposition& d) {
    return 2 * static_cast<int>(d.prefix.size()) + 1;
}

}  // namespace soperm
