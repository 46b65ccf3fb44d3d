#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "soperm/families.hpp"
#include "soperm/oracle.hpp"
#include "soperm/patterns.hpp"
#include "soperm/serialize.hpp"
#include "soperm/series.hpp"
#include "soperm/verify.hpp"

namespace {

using soperm::Json;
using soperm::Rational;

constexpr const char* kToolVersion = "0.1.0";

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct Output {
    std::string format = "json";  // json | csv
    std::string out_path;

    void emit(const std::string& text) const {
        if (out_path.empty()) {
            std::cout << text << '\n';
        } else {
            std::ofstream f(out_path);
            f << text << '\n';
        }
    }

    void emit_envelope(const std::string& command, const Json& parameters,
                       const Json& results) const {
        Json env;
        env["command"] = command;
        env["parameters"] = parameters;
        env["results"] = results;
        env["tool_version"] = kToolVersion;
        emit(env.dump(2));
    }
};

Json sequence_json(const std::vector<mpz_class>& seq) {
    Json arr = Json::array();
    for (const mpz_class& v : seq) arr.push_back(v.get_str());
    return arr;
}

std::string sequence_csv(const std::vector<mpz_class>& seq, int first_n) {
    std::string out = "n,value\n";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        out += std::to_string(first_n + static_cast<int>(i)) + "," +
               seq[i].get_str() + "\n";
    }
    out.pop_back();
    return out;
}

// Myers' count from the pattern size alone; the formula does not depend on
// the shape of an eligible pattern.
mpz_class myers_count_by_size(int p, int n, int m) {
    const int kmax = n / (p - 1);
    if (m < 0 || m > kmax) return 0;
    mpz_class acc = 0;
    for (int k = m; k <= kmax; ++k) {
        mpz_class term = soperm::binomial(k, m) *
                         soperm::binomial(n - (p - 1) * k, k) *
                         soperm::factorial(n - (p - 1) * k);
        if ((k - m) % 2) term = -term;
        acc += term;
    }
    return acc;
}

int default_workers() {
    const unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-overlapping permutations: detection, decomposition, "
                 "enumeration, asymptotic expansions, and brute-force oracles"};
    app.require_subcommand(1);

    Output output;
    int workers = default_workers();
    int cap = soperm::kDefaultEnumerationCap;
    app.add_option("--format", output.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--workers", workers, "Worker threads for enumeration");
    app.add_option("--max-n", cap, "Safety cap for exhaustive enumeration sizes");
    app.add_option("--out", output.out_path, "Write output to a file");

    // detect
    auto* detect = app.add_subcommand("detect", "Overlap profile of a permutation");
    std::string detect_perm, convention = "bona";
    detect->add_option("perm", detect_perm, "Permutation (one-line notation)")
        ->required();
    detect->add_option("--convention", convention,
                       "bona: sigma only; myers: also classify via reverse(sigma)")
        ->check(CLI::IsMember({"bona", "myers"}));

    // decompose
    auto* decomp = app.add_subcommand("decompose", "Palindromic decomposition");
    std::string decomp_perm;
    decomp->add_option("perm", decomp_perm, "Permutation")->required();

    // count
    auto* count = app.add_subcommand("count", "Counting sequences");
    std::string family;
    int count_max_n = 10, count_m = 1;
    count->add_option("--family", family, "nso | so | nso-m | so-m")
        ->required()
        ->check(CLI::IsMember({"nso", "so", "nso-m", "so-m"}));
    count->add_option("--max-n", count_max_n, "Sequence length")->required();
    count->add_option("--m", count_m, "Block parameter for nso-m / so-m");

    // expand
    auto* expand = app.add_subcommand("expand", "Truncated expansion vs exact value");
    std::string target;
    int ex_n = 0, ex_r = 0, ex_m = 1, ex_p = 3;
    expand->add_option("--target", target, "so | so-m | pattern")
        ->required()
        ->check(CLI::IsMember({"so", "so-m", "pattern"}));
    expand->add_option("--n", ex_n, "Permutation size")->required();
    expand->add_option("--r", ex_r, "Truncation order")->required();
    expand->add_option("--m", ex_m, "Block / occurrence parameter");
    expand->add_option("--p", ex_p, "Pattern size (target pattern)");

    // pattern
    auto* pattern = app.add_subcommand("pattern", "Very tight pattern tables");
    std::string pat_pi;
    int pat_n = 0, pat_m = -1;
    bool pat_brute = false;
    pattern->add_option("--pi", pat_pi, "Pattern permutation")->required();
    pattern->add_option("--n", pat_n, "Host size")->required();
    pattern->add_option("--m", pat_m, "Only this occurrence count");
    pattern->add_flag("--brute", pat_brute, "Exhaustive window scan over S_n");

    // coeffs
    auto* coeffs = app.add_subcommand("coeffs", "Expansion coefficients c_k");
    int co_p = 3, co_m = 0, co_r = 8;
    bool co_cross = false;
    coeffs->add_option("--p", co_p, "Pattern size")->required();
    coeffs->add_option("--m", co_m, "Occurrence count")->required();
    coeffs->add_option("--r", co_r, "Number of coefficients (k < r)")->required();
    coeffs->add_flag("--cross-check", co_cross,
                     "Also derive the coefficients by the rebasing route");

    // verify
    auto* verify = app.add_subcommand("verify", "Oracle equivalence suites");
    std::string suite;
    int verify_max_n = 8;
    verify->add_option("--suite", suite, "core | genfunc | patterns | families")
        ->required()
        ->check(CLI::IsMember({"core", "genfunc", "patterns", "families"}));
    verify->add_option("--max-n", verify_max_n, "Largest size to check");

    // sample
    auto* sample = app.add_subcommand("sample", "Monte-Carlo estimates");
    std::string event;
    int sm_n = 0, sm_m = 0;
    std::uint64_t sm_samples = 100000, sm_seed = 1;
    std::string sm_pi;
    sample->add_option("--event", event, "so | blocks | pattern")
        ->required()
        ->check(CLI::IsMember({"so", "blocks", "pattern"}));
    sample->add_option("--n", sm_n, "Permutation size")->required();
    sample->add_option("--samples", sm_samples, "Sample count");
    sample->add_option("--seed", sm_seed, "RNG seed");
    sample->add_option("--m", sm_m, "Block / occurrence parameter");
    sample->add_option("--pi", sm_pi, "Pattern for event=pattern");

    // families
    auto* families = app.add_subcommand(
        "families", "Side-by-side table of NSO / SO / indecomposable / simple");
    int fam_max_n = 9, fam_r = 3;
    families->add_option("--max-n", fam_max_n, "Largest size in the table");
    families->add_option("--r", fam_r, "Truncation order of the expansions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*detect) {
            const soperm::Permutation sigma = soperm::parse_permutation(detect_perm);
            const soperm::OverlapProfile prof = soperm::overlap_profile(sigma);
            Json results = soperm::to_json(prof);
            if (convention == "myers") {
                const soperm::OverlapProfile rev =
                    soperm::overlap_profile(soperm::reverse(sigma));
                results["reverse_ranges"] = rev.ranges;
                results["myers_self_overlapping"] =
                    prof.is_self_overlapping || rev.is_self_overlapping;
            }
            output.emit_envelope("detect",
                                 Json{{"perm", sigma.str()}, {"convention", convention}},
                                 results);
        } else if (*decomp) {
            const soperm::Permutation sigma = soperm::parse_permutation(decomp_perm);
            output.emit_envelope("decompose", Json{{"perm", sigma.str()}},
                                 soperm::to_json(soperm::decompose(sigma)));
        } else if (*count) {
            std::vector<mpz_class> seq;
            int first_n = 1;
            if (family == "nso") {
                seq = soperm::count_nso(count_max_n);
            } else if (family == "so") {
                seq = soperm::count_so(count_max_n);
            } else if (family == "nso-m") {
                seq = soperm::count_nso_m(count_max_n, count_m);
                first_n = 0;
            } else {
                seq = soperm::count_so_m(count_max_n, count_m);
            }
            if (output.format == "csv") {
                output.emit(sequence_csv(seq, first_n));
            } else {
                Json params{{"family", family}, {"max_n", count_max_n}};
                if (family == "nso-m" || family == "so-m") params["m"] = count_m;
                Json results;
                results["first_n"] = first_n;
                results["values"] = sequence_json(seq);
                output.emit_envelope("count", params, results);
            }
        } else if (*expand) {
            Json params{{"target", target}, {"n", ex_n}, {"r", ex_r}};
            Json results;
            if (target == "so") {
                results["truncation"] = soperm::to_json(soperm::eval_so_expansion(ex_n, ex_r));
                results["exact"] = soperm::to_json(soperm::exact_so_probability(ex_n));
                if (ex_n >= 2 * ex_r) {
                    results["remainder_diagnostic"] =
                        soperm::to_json(soperm::remainder_diagnostic(ex_n, ex_r));
                }
            } else if (target == "so-m") {
                params["m"] = ex_m;
                const Rational trunc = soperm::eval_so_m_expansion(ex_n, ex_m, ex_r);
                Rational exact(soperm::count_so_m(ex_n, ex_m).back(),
                               soperm::factorial(ex_n));
                exact.canonicalize();
                results["truncation"] = soperm::to_json(trunc);
                results["exact"] = soperm::to_json(exact);
                if (ex_n >= 2 * ex_r) {
                    Rational diag = (exact - trunc) *
                                    Rational(soperm::factorial_power(
                                        ex_n, 2 * ex_r,
                                        soperm::FactorialDirection::falling));
                    diag.canonicalize();
                    results["remainder_diagnostic"] = soperm::to_json(diag);
                }
            } else {
                params["m"] = ex_m;
                params["p"] = ex_p;
                const Rational trunc =
                    soperm::eval_pattern_expansion_1(ex_p, ex_m, ex_n, ex_r);
                Rational exact(myers_count_by_size(ex_p, ex_n, ex_m),
                               soperm::factorial(ex_n));
                exact.canonicalize();
                results["truncation"] = soperm::to_json(trunc);
                results["exact"] = soperm::to_json(exact);
            }
            output.emit_envelope("expand", params, results);
        } else if (*pattern) {
            const soperm::Permutation pi = soperm::parse_permutation(pat_pi);
            Json params{{"pi", pi.str()}, {"n", pat_n}, {"brute", pat_brute}};
            const bool eligible = soperm::is_eligible(pi);
            soperm::PatternCountTable table;
            if (pat_brute || !eligible || pi.size() < 3) {
                if (!pat_brute) {
                    std::cerr << "warning: pattern is not eligible for Myers' "
                                 "formula; computing a brute-force table\n";
                }
                table = soperm::brute_pattern_table(pi, pat_n, workers, cap);
                // Match the formula path's shape: every feasible m is listed,
                // including zero counts.
                if (pi.size() >= 2) {
                    const int p = static_cast<int>(pi.size());
                    for (int m = 0; m <= pat_n / (p - 1); ++m) {
                        table.counts.emplace(m, 0);
                    }
                }
            } else {
                const soperm::PatternSpec spec{pi};
                table.n = pat_n;
                const int p = static_cast<int>(pi.size());
                for (int m = 0; m <= pat_n / (p - 1); ++m) {
                    table.counts[m] = soperm::myers_count(spec, pat_n, m);
                }
            }
            if (pat_m >= 0) {
                auto it = table.counts.find(pat_m);
                const mpz_class only = it == table.counts.end() ? mpz_class(0) : it->second;
                table.counts.clear();
                table.counts[pat_m] = only;
            }
            if (output.format == "csv") {
                std::string csv = "n,m,count";
                for (const auto& [m, v] : table.counts) {
                    csv += "\n" + std::to_string(table.n) + "," + std::to_string(m) +
                           "," + v.get_str();
                }
                output.emit(csv);
            } else {
                output.emit_envelope("pattern", params, soperm::to_json(table, pi));
            }
        } else if (*coeffs) {
            const soperm::FactorialExpansion expansion =
                soperm::pattern_expansion_coefficients(co_p, co_m, co_r);
            Json params{{"p", co_p}, {"m", co_m}, {"r", co_r}};
            Json results;
            results["coefficients"] = soperm::to_json(expansion);
            if (co_cross) {
                const soperm::FactorialExpansion rebased =
                    soperm::rebase_expansion_via_lemma(co_p, co_m, co_r);
                results["rebased"] = soperm::to_json(rebased);
                results["cross_check_ok"] = expansion.terms == rebased.terms;
            }
            output.emit_envelope("coeffs", params, results);
        } else if (*verify) {
            soperm::VerifyResult result;
            if (suite == "core") {
                result = soperm::verify_core(std::min(verify_max_n, 8));
            } else if (suite == "genfunc") {
                result = soperm::verify_genfunc(verify_max_n, workers);
            } else if (suite == "patterns") {
                result = soperm::verify_patterns(verify_max_n, workers);
            } else {
                result = soperm::verify_families(verify_max_n);
            }
            Json results;
            results["ok"] = result.ok;
            results["failures"] = result.failures;
            output.emit_envelope("verify",
                                 Json{{"suite", suite}, {"max_n", verify_max_n}},
                                 results);
            if (!result.ok) return kExitVerifyFailure;
        } else if (*sample) {
            soperm::SampleEvent ev = soperm::SampleEvent::self_overlapping();
            Json params{{"event", event},
                        {"n", sm_n},
                        {"samples", std::to_string(sm_samples)},
                        {"seed", std::to_string(sm_seed)}};
            if (event == "blocks") {
                ev = soperm::SampleEvent::blocks(sm_m);
                params["m"] = sm_m;
            } else if (event == "pattern") {
                ev = soperm::SampleEvent::pattern_occurrence(soperm::parse_permutation(sm_pi),
                                                  sm_m);
                params["pi"] = ev.pattern.str();
                params["m"] = sm_m;
            }
            const soperm::SampleEstimate est =
                soperm::estimate_probability(ev, sm_n, sm_samples, sm_seed);
            output.emit_envelope("sample", params, soperm::to_json(est));
        } else if (*families) {
            const int N = fam_max_n;
            const std::vector<mpz_class> nso = soperm::count_nso(N);
            const std::vector<mpz_class> so = soperm::count_so(N);
            const std::vector<mpz_class> ind = soperm::count_indecomposable(N);
            const std::vector<mpz_class> simple =
                N >= 4 ? soperm::count_simple(N) : std::vector<mpz_class>{};
            if (output.format == "csv") {
                std::string csv = "n,nso,so,indecomposable,simple";
                for (int n = 1; n <= N; ++n) {
                    csv += "\n" + std::to_string(n) + "," +
                           nso[static_cast<std::size_t>(n - 1)].get_str() + "," +
                           so[static_cast<std::size_t>(n - 1)].get_str() + "," +
                           ind[static_cast<std::size_t>(n - 1)].get_str() + "," +
                           (n >= 4 ? simple[static_cast<std::size_t>(n - 4)].get_str()
                                   : "0");
                }
                output.emit(csv);
            } else {
                Json rows = Json::array();
                for (int n = 1; n <= N; ++n) {
                    Json row;
                    row["n"] = n;
                    row["nso"] = nso[static_cast<std::size_t>(n - 1)].get_str();
                    row["so"] = so[static_cast<std::size_t>(n - 1)].get_str();
                    row["indecomposable"] =
                        ind[static_cast<std::size_t>(n - 1)].get_str();
                    row["simple"] =
                        n >= 4 ? simple[static_cast<std::size_t>(n - 4)].get_str() : "0";
                    Rational nso_exact(nso[static_cast<std::size_t>(n - 1)],
                                       soperm::factorial(n));
                    nso_exact.canonicalize();
                    row["nso_probability"] = soperm::decimal_string(nso_exact);
                    if (n >= 2 * (fam_r - 1)) {
                        Rational trunc =
                            Rational(1) - soperm::eval_so_expansion(n, fam_r);
                        row["nso_truncation"] = soperm::decimal_string(trunc);
                    }
                    Rational ind_exact(ind[static_cast<std::size_t>(n - 1)],
                                       soperm::factorial(n));
                    ind_exact.canonicalize();
                    row["indecomposable_probability"] =
                        soperm::decimal_string(ind_exact);
                    if (n >= fam_r - 1) {
                        row["indecomposable_truncation"] = soperm::decimal_string(
                            soperm::eval_indecomposable_expansion(n, fam_r));
                    }
                    if (n >= 4) {
                        Rational simple_exact(simple[static_cast<std::size_t>(n - 4)],
                                              soperm::factorial(n));
                        simple_exact.canonicalize();
                        row["simple_probability"] = soperm::decimal_string(simple_exact);
                        row["simple_truncation"] = soperm::eval_simple_expansion(n);
                    }
                    rows.push_back(row);
                }
                Json results;
                results["rows"] = rows;
                // Eq-style coefficients rescaled by k!; shown for inspection only.
                Json rescaled = Json::array();
                const std::vector<Rational> base = {
                    Rational(1), Rational(-4), Rational(2), Rational(-40, 3),
                    Rational(-182, 3)};
                for (std::size_t k = 0; k < base.size(); ++k) {
                    Rational c = base[k] * Rational(soperm::factorial(static_cast<int>(k)));
                    c.canonicalize();
                    rescaled.push_back(soperm::to_json(c, false));
                }
                results["simple_coefficients_rescaled_by_k_factorial"] = rescaled;
                output.emit_envelope("families",
                                     Json{{"max_n", N}, {"r", fam_r}}, results);
            }
        }
    } catch (const soperm::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
