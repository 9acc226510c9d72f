// bfdeg: algebraic-degree toolkit for Boolean functions given by truth
// tables. Subcommands cover degree/ANF computation, weight-lexicographic
// sequences and layer masks, exact degree-distribution counts, the
// benchmark harness, and self-verification.

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bfdeg/anf.hpp"
#include "bfdeg/bench.hpp"
#include "bfdeg/degree.hpp"
#include "bfdeg/distribution.hpp"
#include "bfdeg/oracle.hpp"
#include "bfdeg/truth_table.hpp"
#include "bfdeg/wlo.hpp"

namespace {

using namespace bfdeg;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

// ---------------------------------------------------------------------
// Input handling
// ---------------------------------------------------------------------

struct InputOptions {
    int n = 0;
    std::string bits;
    std::vector<std::string> hex;
    std::string file;
};

std::uint64_t parse_hex_word(std::string_view token) {
    if (token.starts_with("0x") || token.starts_with("0X")) token.remove_prefix(2);
    if (token.empty() || token.size() > 16) {
        throw std::invalid_argument("hex word '" + std::string(token) +
                                    "' must have 1..16 hex digits");
    }
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, 16);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::invalid_argument("invalid hex word '" + std::string(token) + "'");
    }
    return value;
}

TruthTable load_input(const InputOptions& in) {
    const int sources = !in.bits.empty() + !in.hex.empty() + !in.file.empty();
    if (sources != 1) {
        throw std::invalid_argument("exactly one of --bits, --hex, --file is required");
    }
    if (!in.bits.empty()) return truth_table_from_text(in.bits, in.n);
    if (!in.file.empty()) return read_truth_table(in.file, in.n);

    std::vector<std::uint64_t> words;
    for (const std::string& arg : in.hex) {
        // allow comma-separated lists inside one argument
        std::size_t pos = 0;
        while (pos <= arg.size()) {
            const std::size_t comma = arg.find(',', pos);
            const std::string_view token(arg.data() + pos,
                                         (comma == std::string::npos ? arg.size() : comma) - pos);
            if (!token.empty()) words.push_back(parse_hex_word(token));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return TruthTable(in.n, std::move(words));
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("-n,--nvars", in.n, "variable count")->required();
    cmd->add_option("--bits", in.bits, "truth table as a 0/1 string, character j = f_j");
    cmd->add_option("--hex", in.hex,
                    "truth table as 64-bit hex words, lowest-index word first")
        ->expected(-1);
    cmd->add_option("--file", in.file, "binary truth-table file (little-endian words)");
}

std::string hex_words_line(std::span<const std::uint64_t> words) {
    std::string line;
    for (std::size_t i = 0; i < words.size(); ++i) {
        char buf[20];
        std::snprintf(buf, sizeof(buf), "0x%llx", static_cast<unsigned long long>(words[i]));
        if (i) line += ' ';
        line += buf;
    }
    return line;
}

// ---------------------------------------------------------------------
// degree
// ---------------------------------------------------------------------

struct DegreeOptions {
    InputOptions input;
    std::string pipeline = "bit:PC+ANFT+WLO";
    bool explain = false;
    bool symbolic = false;
};

std::string degree_string(Degree d, bool symbolic) {
    if (d.is_neg_infinity() && symbolic) return "-inf";
    return std::to_string(d.sentinel());
}

// Above kMaxSequenceVars the layer tables are not materialized; scan
// the transformed words directly for the heaviest set coefficient.
Degree degree_without_tables(const AnfVector& anf) {
    int best = -1;
    for (std::size_t col = 0; col < anf.words.size(); ++col) {
        std::uint64_t w = anf.words[col];
        while (w) {
            const int b = std::countr_zero(w);
            w &= w - 1;
            const std::uint64_t index = (static_cast<std::uint64_t>(col) << 6) | b;
            const int weight = std::popcount(index);
            if (weight > best) best = weight;
        }
    }
    return Degree::from_sentinel(best);
}

int run_degree(const DegreeOptions& opt) {
    const TruthTable tt = load_input(opt.input);
    const PipelineKind kind = pipeline_from_name(opt.pipeline);

    const int parity = parity_check(tt);
    const bool skip_anft = pipeline_has_parity_step(kind) && parity == 1;

    if (tt.n > kMaxSequenceVars) {
        const Degree result =
            skip_anft ? Degree::of(tt.n) : degree_without_tables(anft_bitwise(tt));
        if (opt.explain) {
            std::cout << "parity_bit " << parity << "\n";
            std::cout << "anft " << (skip_anft ? "skipped" : "computed") << "\n";
            std::cout << "layer "
                      << (result.is_neg_infinity() ? std::string("none")
                                                   : std::to_string(result.value()))
                      << "\n";
        }
        std::cout << degree_string(result, opt.symbolic) << "\n";
        return kExitOk;
    }

    const DegreeTables tables = make_degree_tables(tt.n);

    Degree result = Degree::neg_infinity();
    if (skip_anft) {
        result = Degree::of(tt.n);
    } else if (pipeline_is_bitwise(kind)) {
        const AnfVector anf = anft_bitwise(tt);
        result = (kind == PipelineKind::kBitAnftWlo || kind == PipelineKind::kBitPcAnftWlo)
                     ? deg_wlo_bitwise(anf, tables.masks)
                     : deg_cb_wlo(anf, tables.seq);
    } else {
        const ByteTable anf = anft_bytewise(unpack(tt));
        result = (kind == PipelineKind::kByteAnftEs || kind == PipelineKind::kBytePcAnftEs)
                     ? deg_es(anf)
                     : deg_wlo_bytewise(anf, tables.seq);
    }

    if (opt.explain) {
        std::cout << "parity_bit " << parity << "\n";
        std::cout << "anft " << (skip_anft ? "skipped" : "computed") << "\n";
        std::cout << "layer "
                  << (result.is_neg_infinity() ? std::string("none")
                                               : std::to_string(result.value()))
                  << "\n";
    }
    std::cout << degree_string(result, opt.symbolic) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------
// anf
// ---------------------------------------------------------------------

struct AnfOptions {
    InputOptions input;
    std::string out_file;
};

int run_anf(const AnfOptions& opt) {
    const TruthTable tt = load_input(opt.input);
    const AnfVector anf = anft_bitwise(tt);
    if (!opt.out_file.empty()) {
        write_packed_words(opt.out_file, anf.words);
        return kExitOk;
    }
    if (!opt.input.bits.empty()) {
        std::cout << anf_to_text(anf) << "\n";
    } else {
        std::cout << hex_words_line(anf.words) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------
// wlo / masks
// ---------------------------------------------------------------------

int run_wlo(int n, const std::string& route) {
    const WloSequence seq = route == "recursive" ? wlo_recursive(n) : wlo_bucket(n);
    std::string line;
    for (std::size_t i = 0; i < seq.order.size(); ++i) {
        if (i) line += ", ";
        line += std::to_string(seq.order[i]);
    }
    std::cout << line << "\n";
    return kExitOk;
}

int run_masks(int n) {
    const MaskSet masks = masks_direct(n);
    for (int k = 0; k <= n; ++k) {
        std::cout << hex_words_line(masks.layer(k)) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------
// dist
// ---------------------------------------------------------------------

int run_dist(int n) {
    std::cout << "-inf 1\n";
    for (int k = 0; k <= n; ++k) {
        std::cout << k << " " << count_formula(n, k).str() << "\n";
    }
    const BigInt all = BigInt(1) << (std::uint64_t{1} << n);
    std::cout << "total " << all.str() << "\n";
    std::cout << "high_degree_fraction " << high_degree_fraction(n).str() << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------

struct BenchOptions {
    std::uint64_t seed = 42;
    std::size_t words = 10'000'000;
    std::vector<int> nvars = {6, 8, 10, 12, 14, 16};
    std::vector<std::string> pipelines;
    int runs = 5;
    bool full_protocol = false;
    std::string output;
};

int run_bench(const BenchOptions& opt) {
    std::vector<PipelineKind> kinds;
    if (opt.pipelines.empty()) {
        kinds.assign(kAllPipelines.begin(), kAllPipelines.end());
    } else {
        for (const std::string& name : opt.pipelines) kinds.push_back(pipeline_from_name(name));
    }

    std::vector<BenchRow> rows;
    for (int n : opt.nvars) {
        const Workload workload = generate_workload(opt.seed, opt.words, n);
        const DegreeTables tables = make_degree_tables(n);
        for (PipelineKind kind : kinds) {
            rows.push_back(
                run_pipeline_averaged(kind, workload, tables, opt.runs, opt.full_protocol));
            std::cerr << pipeline_name(kind) << " n=" << n << ": " << rows.back().seconds
                      << " s over " << rows.back().functions << " functions\n";
        }
    }

    const std::string csv = report(rows);
    if (opt.output.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(opt.output);
        if (!out) throw std::runtime_error("cannot open '" + opt.output + "' for writing");
        out << csv;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

struct VerifyState {
    bool ok = true;

    void fail(const std::string& what, const std::string& counterexample) {
        ok = false;
        std::cout << "FAIL " << what << "\n";
        if (!counterexample.empty()) std::cout << "  counterexample: " << counterexample << "\n";
    }

    void pass(const std::string& what) { std::cout << "ok   " << what << "\n"; }
};

std::string describe_function(const ByteTable& f) {
    std::string bits(f.values.size(), '0');
    for (std::size_t i = 0; i < f.values.size(); ++i) bits[i] = f.values[i] ? '1' : '0';
    return "n=" + std::to_string(f.n) + " tt=" + bits;
}

ByteTable random_byte_table(SplitMix64& rng, int n) {
    ByteTable f = ByteTable::zeros(n);
    std::uint64_t pool = 0;
    int left = 0;
    for (auto& v : f.values) {
        if (left == 0) {
            pool = rng.next();
            left = 64;
        }
        v = static_cast<std::uint8_t>(pool & 1);
        pool >>= 1;
        --left;
    }
    return f;
}

// All degree algorithms plus the combined pipelines on one function.
bool degrees_agree(const ByteTable& f, const DegreeTables& tables, bool with_oracle,
                   std::string& detail) {
    const TruthTable tt = pack(f);
    const ByteTable anf_b = anft_bytewise(f);
    const AnfVector anf_w = anft_bitwise(tt);

    const Degree reference = deg_es(anf_b);
    const std::pair<const char*, Degree> computed[] = {
        {"wlo_bytewise", deg_wlo_bytewise(anf_b, tables.seq)},
        {"wlo_bitwise", deg_wlo_bitwise(anf_w, tables.masks)},
        {"cb_wlo", deg_cb_wlo(anf_w, tables.seq)},
        {"method_bitwise/wlo", method_bitwise(tt, tables.masks, tables.seq, BitwiseTail::kWlo)},
        {"method_bitwise/cb", method_bitwise(tt, tables.masks, tables.seq, BitwiseTail::kCbWlo)},
        {"method_bytewise/es", method_bytewise(f, tables.seq, BytewiseTail::kEs)},
        {"method_bytewise/wlo", method_bytewise(f, tables.seq, BytewiseTail::kWlo)},
    };
    for (const auto& [name, got] : computed) {
        if (got != reference) {
            detail = std::string(name) + " gave " + std::to_string(got.sentinel()) +
                     ", es gave " + std::to_string(reference.sentinel());
            return false;
        }
    }
    if (with_oracle) {
        const Degree oracle = deg_oracle(f);
        if (oracle != reference) {
            detail = "oracle gave " + std::to_string(oracle.sentinel()) + ", es gave " +
                     std::to_string(reference.sentinel());
            return false;
        }
    }
    return true;
}

int run_verify(const std::string& level, bool corrupt_mask) {
    VerifyState state;

    // Sequence routes and masks.
    for (int n = 1; n <= 12; ++n) {
        const WloSequence bucket = wlo_bucket(n);
        const WloSequence recursive = wlo_recursive(n);
        if (bucket.order != recursive.order || bucket.layer_start != recursive.layer_start) {
            state.fail("wlo bucket/recursive agreement", "n=" + std::to_string(n));
        }
        MaskSet direct = masks_direct(n);
        if (corrupt_mask) direct.storage[0] ^= 2;  // negative-control fixture
        const MaskSet from_seq = masks_from_wlo(bucket);
        if (direct.storage != from_seq.storage) {
            state.fail("mask route agreement", "n=" + std::to_string(n));
        }
    }
    if (state.ok) state.pass("wlo + mask generation routes agree (n <= 12)");

    // Parity against weight.
    {
        SplitMix64 rng(7);
        bool all_ok = true;
        for (int n : {6, 10, 16}) {
            for (int rep = 0; rep < 500 && all_ok; ++rep) {
                TruthTable tt = TruthTable::zeros(n);
                for (auto& w : tt.words) w = rng.next();
                if (parity_check(tt) != static_cast<int>(weight_words(tt) & 1)) {
                    state.fail("parity vs weight", "n=" + std::to_string(n) + " words[0]=" +
                                                       std::to_string(tt.words[0]));
                    all_ok = false;
                }
            }
        }
        if (all_ok) state.pass("parity check equals weight mod 2 (random n=6,10,16)");
    }

    // Transform properties and algorithm agreement on random functions.
    {
        SplitMix64 rng(11);
        bool all_ok = true;
        for (int n : {6, 8, 10}) {
            const DegreeTables tables = make_degree_tables(n);
            for (int rep = 0; rep < 300 && all_ok; ++rep) {
                const ByteTable f = random_byte_table(rng, n);
                const ByteTable anf = anft_bytewise(f);
                if (anft_bytewise(anf).values != f.values) {
                    state.fail("anft involution", describe_function(f));
                    all_ok = false;
                    break;
                }
                if (pack_anf(anf).words != anft_bitwise(pack(f)).words) {
                    state.fail("anft bitwise/bytewise agreement", describe_function(f));
                    all_ok = false;
                    break;
                }
                std::string detail;
                if (!degrees_agree(f, tables, n <= 10 && rep < 50, detail)) {
                    state.fail("degree algorithm agreement", describe_function(f) + ": " + detail);
                    all_ok = false;
                    break;
                }
            }
        }
        if (all_ok) state.pass("anft properties + degree agreement (random n=6,8,10)");
    }

    // Counting identities.
    {
        bool all_ok = true;
        for (int n = 1; n <= kMaxCountVars && all_ok; ++n) {
            BigInt sum = 1;  // zero function
            for (int k = 0; k <= n; ++k) sum += count_formula(n, k);
            if (sum != BigInt(1) << (std::uint64_t{1} << n)) {
                state.fail("count completeness", "n=" + std::to_string(n));
                all_ok = false;
            }
            if (count_formula(n, n) != BigInt(1) << ((std::uint64_t{1} << n) - 1)) {
                state.fail("count of maximal degree", "n=" + std::to_string(n));
                all_ok = false;
            }
        }
        if (all_ok) state.pass("distribution identities (n <= 16)");
    }

    if (level == "exhaustive") {
        for (int n = 1; n <= kMaxEnumVars; ++n) {
            const DegreeTables tables = make_degree_tables(n);
            const std::uint64_t size = table_size(n);
            DegreeDistribution tally;
            tally.n = n;
            tally.zero_function = 0;
            tally.by_degree.assign(n + 1, 0);
            bool all_ok = true;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
                ByteTable f = ByteTable::zeros(n);
                for (std::uint64_t i = 0; i < size; ++i) {
                    f.values[i] = static_cast<std::uint8_t>((bits >> i) & 1);
                }
                std::string detail;
                if (!degrees_agree(f, tables, true, detail)) {
                    state.fail("exhaustive degree agreement", describe_function(f) + ": " + detail);
                    all_ok = false;
                    break;
                }
                const Degree d = deg_oracle(f);
                const bool odd = weight_bytes(f) & 1;
                if (odd != (d == Degree::of(n))) {
                    state.fail("odd weight <=> maximal degree", describe_function(f));
                    all_ok = false;
                    break;
                }
                if (d.is_neg_infinity()) {
                    ++tally.zero_function;
                } else {
                    ++tally.by_degree[d.value()];
                }
            }
            if (all_ok) {
                for (int k = 0; k <= n; ++k) {
                    if (tally.by_degree[k] != count_formula(n, k)) {
                        state.fail("enumerated counts vs formula",
                                   "n=" + std::to_string(n) + " k=" + std::to_string(k));
                        all_ok = false;
                    }
                }
            }
            if (all_ok) {
                std::cout << "ok   exhaustive check of " << (std::uint64_t{1} << size)
                          << " functions at n=" << n << "\n";
            }
        }
    }

    std::cout << (state.ok ? "verify: all checks passed\n" : "verify: FAILED\n");
    return state.ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"algebraic degree toolkit for Boolean functions"};
    app.require_subcommand(1);

    DegreeOptions degree_opt;
    CLI::App* degree_cmd =
        app.add_subcommand("degree", "compute the algebraic degree of one function");
    add_input_options(degree_cmd, degree_opt.input);
    degree_cmd->add_option("--pipeline", degree_opt.pipeline,
                           "algorithm chain (default bit:PC+ANFT+WLO)");
    degree_cmd->add_flag("--explain", degree_opt.explain,
                         "also print the parity bit, transform step, and layer hit");
    degree_cmd->add_flag("--symbolic", degree_opt.symbolic,
                         "print -inf instead of -1 for the zero function");

    AnfOptions anf_opt;
    CLI::App* anf_cmd = app.add_subcommand("anf", "compute the ANF coefficient vector");
    add_input_options(anf_cmd, anf_opt.input);
    anf_cmd->add_option("--out", anf_opt.out_file, "write packed coefficients to a binary file");

    int wlo_n = 0;
    std::string wlo_route = "bucket";
    CLI::App* wlo_cmd = app.add_subcommand("wlo", "print the weight-lexicographic sequence");
    wlo_cmd->add_option("-n,--nvars", wlo_n, "variable count")->required();
    wlo_cmd->add_option("--route", wlo_route, "generation route: bucket or recursive")
        ->check(CLI::IsMember({"bucket", "recursive"}));

    int masks_n = 0;
    CLI::App* masks_cmd = app.add_subcommand("masks", "print the layer masks, layer 0 first");
    masks_cmd->add_option("-n,--nvars", masks_n, "variable count")->required();

    int dist_n = 0;
    CLI::App* dist_cmd =
        app.add_subcommand("dist", "print the degree distribution of all n-variable functions");
    dist_cmd->add_option("-n,--nvars", dist_n, "variable count")->required();

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the degree pipelines");
    bench_cmd->add_option("--seed", bench_opt.seed, "PRNG seed (default 42)");
    bench_cmd->add_option("--words", bench_opt.words,
                          "64-bit words per workload (default 10^7)");
    bench_cmd->add_option("--nvars", bench_opt.nvars,
                          "variable counts to test (default 6 8 10 12 14 16)")
        ->expected(-1);
    bench_cmd->add_option("--pipelines", bench_opt.pipelines,
                          "pipeline names to run (default: all eight)")
        ->expected(-1);
    bench_cmd->add_option("--runs", bench_opt.runs, "timed repetitions per row (default 5)");
    bench_cmd->add_flag("--full-protocol", bench_opt.full_protocol,
                        "drop the fastest and slowest run, average the rest");
    bench_cmd->add_option("--output", bench_opt.output, "write the CSV here instead of stdout");

    std::string verify_level = "quick";
    bool verify_corrupt = false;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the self-check suites");
    verify_cmd->add_option("--level", verify_level, "quick or exhaustive")
        ->check(CLI::IsMember({"quick", "exhaustive"}));
    verify_cmd->add_flag("--corrupt-mask", verify_corrupt)->group("");  // negative-control hook

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(degree_cmd)) return run_degree(degree_opt);
        if (app.got_subcommand(anf_cmd)) return run_anf(anf_opt);
        if (app.got_subcommand(wlo_cmd)) return run_wlo(wlo_n, wlo_route);
        if (app.got_subcommand(masks_cmd)) return run_masks(masks_n);
        if (app.got_subcommand(dist_cmd)) return run_dist(dist_n);
        if (app.got_subcommand(bench_cmd)) return run_bench(bench_opt);
        if (app.got_subcommand(verify_cmd)) return run_verify(verify_level, verify_corrupt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
