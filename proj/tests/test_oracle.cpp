#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "soperm/oracle.hpp"
#include "soperm/series.hpp"
#include "soperm/verify.hpp"

using namespace soperm;

namespace {

Permutation perm(const char* text) { return parse_permutation(text); }

}  // namespace

TEST_CASE("enumerate_classify on S_4") {
    const ClassificationReport r = enumerate_classify(4, 1);
    CHECK(r.total == 24);
    CHECK(r.so_count == 3);
    CHECK(r.nso_count == 21);
    CHECK(r.block_histogram ==
          std::map<int, std::uint64_t>{{1, 21}, {3, 2}, {5, 1}});
    CHECK(r.range_histogram == std::map<int, std::uint64_t>{{1, 2}, {2, 1}});
}

TEST_CASE("enumerate_classify on S_1") {
    const ClassificationReport r = enumerate_classify(1, 4);
    CHECK(r.so_count == 0);
    CHECK(r.nso_count == 1);
}

TEST_CASE("enumeration is independent of the worker count") {
    const ClassificationReport base = enumerate_classify(7, 1);
    for (int workers : {2, 8}) {
        const ClassificationReport r = enumerate_classify(7, workers);
        CHECK(r.so_count == base.so_count);
        CHECK(r.nso_count == base.nso_count);
        CHECK(r.block_histogram == base.block_histogram);
        CHECK(r.range_histogram == base.range_histogram);
    }
}

TEST_CASE("size caps") {
    CHECK_THROWS_AS(enumerate_classify(12, 1), SizeCapExceeded);
    CHECK_THROWS_AS(enumerate_classify(14, 1, 14), SizeCapExceeded);  // hard cap
    CHECK_THROWS_AS(enumerate_classify(0, 1), SizeCapExceeded);
    CHECK_THROWS_AS(brute_pattern_table(perm("132"), 12, 1), SizeCapExceeded);
}

TEST_CASE("enumeration matches the counting formulas up to n = 8") {
    const VerifyResult r = verify_genfunc(8, 2);
    for (const std::string& f : r.failures) FAIL_CHECK(f);
    CHECK(r.ok);
}

TEST_CASE("brute_pattern_table") {
    const PatternCountTable t4 = brute_pattern_table(perm("132"), 4, 1);
    CHECK(t4.counts == std::map<int, mpz_class>{{0, 20}, {1, 4}});

    const PatternCountTable t3 = brute_pattern_table(perm("132"), 3, 1);
    CHECK(t3.counts == std::map<int, mpz_class>{{0, 5}, {1, 1}});

    // n = p: only sigma = pi contains itself very tightly.
    for (const char* pi : {"132", "2413", "321"}) {
        const PatternCountTable t = brute_pattern_table(perm(pi),
            static_cast<int>(perm(pi).size()), 1);
        CHECK(t.counts.at(1) == 1);
        CHECK(t.counts.at(0) == factorial(static_cast<int>(perm(pi).size())) - 1);
    }
}

TEST_CASE("sample_uniform determinism") {
    CHECK(sample_uniform(1, 42) == perm("1"));
    const Permutation a = sample_uniform(9, 12345);
    const Permutation b = sample_uniform(9, 12345);
    CHECK(a == b);
    CHECK(sample_uniform(9, 12346) != a);  // different stream
}

TEST_CASE("sample_uniform is uniform on S_3") {
    const int samples = 60000;
    std::map<std::vector<int>, int> freq;
    for (int s = 0; s < samples; ++s) {
        freq[sample_uniform(3, 777 + static_cast<std::uint64_t>(s)).values()]++;
    }
    CHECK(freq.size() == 6);
    const double expected = samples / 6.0;
    const double stderr5 = 5.0 * std::sqrt(expected * (1.0 - 1.0 / 6.0));
    for (const auto& [p, count] : freq) {
        CHECK(std::abs(count - expected) <= stderr5);
    }
}

TEST_CASE("estimate_probability") {
    const SampleEstimate so6 =
        estimate_probability(SampleEvent::self_overlapping(), 6, 200000, 2024);
    const double exact_so6 = 31.0 / 720.0;
    CHECK(std::abs(so6.estimate - exact_so6) <= 5.0 * so6.stderr_);

    const SampleEstimate so2 =
        estimate_probability(SampleEvent::self_overlapping(), 2, 10000, 7);
    CHECK(std::abs(so2.estimate - 0.5) <= 5.0 * so2.stderr_);

    const SampleEstimate pat =
        estimate_probability(SampleEvent::pattern_occurrence(perm("132"), 0), 4, 200000, 99);
    CHECK(std::abs(pat.estimate - 20.0 / 24.0) <= 5.0 * pat.stderr_);

    const SampleEstimate blocks =
        estimate_probability(SampleEvent::blocks(1), 4, 200000, 5);
    CHECK(std::abs(blocks.estimate - 2.0 / 24.0) <= 5.0 * blocks.stderr_);

    // Determinism contract.
    const SampleEstimate again =
        estimate_probability(SampleEvent::self_overlapping(), 6, 200000, 2024);
    CHECK(again.hits == so6.hits);
}

TEST_CASE("mutation smoke test for sequence comparison") {
    std::vector<mpz_class> good = count_nso(8);
    CHECK(verify_sequences("nso", good, count_nso(8)).ok);
    std::vector<mpz_class> bad = good;
    bad[5] += 1;
    CHECK_FALSE(verify_sequences("nso", bad, good).ok);
}
