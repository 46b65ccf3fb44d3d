#include "soperm/serialize.hpp"

namespace soperm {

namespace {

// Compares 2*rem with den, for round-half-to-even.
int cmp_half(const mpz_class& rem, const mpz_class& den) {
    mpz_class two_rem = 2 * rem;
    return cmp(two_rem, den);
}

}  // namespace

std::string decimal_string(const Rational& q, int significant_digits) {
    if (q == 0) return "0";
    mpz_class a = abs(q.get_num());
    mpz_class b = q.get_den();
    const bool negative = q < 0;

    // Decimal exponent e with 10^e <= a/b < 10^(e+1).
    int e = 0;
    mpz_class lo = a, hi = b;
    while (lo < hi) {
        lo *= 10;
        --e;
    }
    while (lo >= 10 * hi) {
        hi *= 10;
        ++e;
    }
    // digits = round(a/b * 10^(sig-1-e)), half to even.
    mpz_class num = a, den = b;
    const int shift = significant_digits - 1 - e;
    if (shift >= 0) {
        mpz_class pow;
        mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= pow;
    } else {
        mpz_class pow;
        mpz_ui_pow_ui(pow.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= pow;
    }
    mpz_class digits = num / den;
    mpz_class rem = num - digits * den;
    const int half = cmp_half(rem, den);
    if (half > 0 || (half == 0 && mpz_odd_p(digits.get_mpz_t()))) ++digits;

    std::string ds = digits.get_str();
    // Rounding may carry into one extra digit (e.g. 999.. -> 1000..).
    if (static_cast<int>(ds.size()) > significant_digits) {
        ds.pop_back();
        ++e;
    }
    while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

    std::string out;
    if (negative) out += '-';
    if (e >= -4 && e < significant_digits) {
        if (e >= 0) {
            if (static_cast<int>(ds.size()) <= e) {
                ds.append(static_cast<std::size_t>(e) + 1 - ds.size(), '0');
            }
            out += ds.substr(0, static_cast<std::size_t>(e) + 1);
            if (ds.size() > static_cast<std::size_t>(e) + 1) {
                out += '.';
                out += ds.substr(static_cast<std::size_t>(e) + 1);
            }
        } else {
            out += "0.";
            out.append(static_cast<std::size_t>(-e) - 1, '0');
            out += ds;
        }
    } else {
        out += ds.substr(0, 1);
        if (ds.size() > 1) {
            out += '.';
            out += ds.substr(1);
        }
        out += 'e';
        out += std::to_string(e);
    }
    return out;
}

Json to_json(const OverlapProfile& p) {
    Json j;
    j["is_self_overlapping"] = p.is_self_overlapping;
    j["ranges"] = p.ranges;
    if (p.is_self_overlapping) j["minimal"] = p.minimal;
    return j;
}

Json to_json(const PalindromicDecomposition& d) {
    Json j;
    Json prefix = Json::array();
    for (const Permutation& b : d.prefix) prefix.push_back(b.str());
    j["prefix"] = prefix;
    j["middle"] = d.middle.str();
    j["block_count"] = block_count(d);
    return j;
}

Json to_json(const Rational& q, bool with_decimal) {
    Json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    if (with_decimal) j["decimal"] = decimal_string(q);
    return j;
}

Json to_json(const FactorialExpansion& e) {
    Json j;
    j["basis_step"] = e.basis_step;
    j["remainder_order"] = e.remainder_order;
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms) {
        Json t;
        t["k"] = k;
        t["coefficient"] = to_json(c);
        terms.push_back(t);
    }
    j["terms"] = terms;
    return j;
}

namespace {

Json histogram_json(const std::map<int, std::uint64_t>& h) {
    Json j = Json::object();
    for (auto [k, v] : h) j[std::to_string(k)] = std::to_string(v);
    return j;
}

}  // namespace

Json to_json(const ClassificationReport& r) {
    Json j;
    j["n"] = r.n;
    j["total"] = std::to_string(r.total);
    j["so_count"] = std::to_string(r.so_count);
    j["nso_count"] = std::to_string(r.nso_count);
    j["block_histogram"] = histogram_json(r.block_histogram);
    j["range_histogram"] = histogram_json(r.range_histogram);
    return j;
}

Json to_json(const PatternCountTable& t, const Permutation& pi) {
    Json j;
    j["n"] = t.n;
    j["pattern"] = pi.str();
    Json counts = Json::object();
    for (const auto& [m, v] : t.counts) counts[std::to_string(m)] = v.get_str();
    j["counts"] = counts;
    return j;
}

Json to_json(const SampleEstimate& e) {
    Json j;
    j["samples"] = std::to_string(e.samples);
    j["hits"] = std::to_string(e.hits);
    Json est;
    est["num"] = std::to_string(e.hits);
    est["den"] = std::to_string(e.samples);
    est["decimal"] =
        e.samples ? decimal_string(Rational(static_cast<unsigned long>(e.hits),
                                            static_cast<unsigned long>(e.samples)))
                  : "0";
    j["estimate"] = est;
    j["stderr"] = e.stderr_;
    j["seed"] = std::to_string(e.seed);
    return j;
}

}  // namespace soperm
