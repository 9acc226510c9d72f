#include "bfdeg/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "bfdeg/anf.hpp"

namespace bfdeg {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Staging buffers are capped around this size so even byte-expanded
// chunks stay cache- and RAM-friendly.
constexpr std::size_t kChunkByteBudget = std::size_t{64} << 20;

std::uint64_t fold_degrees(std::span<const std::int8_t> degrees) {
    std::uint64_t h = 0;
    for (std::int8_t d : degrees) {
        h = std::rotl(h, 1) ^ static_cast<std::uint8_t>(d + 1);
    }
    return h;
}

// One function's chain, byte representation. `table` is scratch holding
// TT(f) on entry; the transform runs in place.
int byte_chain(PipelineKind kind, std::span<std::uint8_t> table, const WloSequence& seq) {
    const int n = seq.n;
    if (pipeline_has_parity_step(kind) && (weight_of_bytes(table) & 1)) return n;
    anft_bytewise_inplace(table);
    const bool es = kind == PipelineKind::kByteAnftEs || kind == PipelineKind::kBytePcAnftEs;
    const Degree d = es ? deg_es(std::span<const std::uint8_t>(table))
                        : deg_wlo_bytewise(std::span<const std::uint8_t>(table), seq);
    return d.sentinel();
}

// One function's chain, packed representation; `words` is scratch.
int bit_chain(PipelineKind kind, std::span<std::uint64_t> words, const DegreeTables& tables) {
    const int n = tables.seq.n;
    if (pipeline_has_parity_step(kind) && parity_of_words(words)) return n;
    anft_bitwise_inplace(words, n);
    const bool masked =
        kind == PipelineKind::kBitAnftWlo || kind == PipelineKind::kBitPcAnftWlo;
    const Degree d = masked
                         ? deg_wlo_bitwise(std::span<const std::uint64_t>(words), tables.masks)
                         : deg_cb_wlo(std::span<const std::uint64_t>(words), tables.seq);
    return d.sentinel();
}

}  // namespace

std::vector<std::uint64_t> generate(std::uint64_t seed, std::size_t count) {
    if (count == 0) throw std::invalid_argument("word stream must hold at least one word");
    SplitMix64 rng(seed);
    std::vector<std::uint64_t> words(count);
    for (auto& w : words) w = rng.next();
    return words;
}

Workload generate_workload(std::uint64_t seed, std::size_t total_words, int n_vars) {
    check_var_count(n_vars);
    const std::size_t per_function = words_per_table(n_vars);
    const std::size_t usable = total_words - total_words % per_function;
    if (usable == 0) {
        throw std::invalid_argument("workload of " + std::to_string(total_words) +
                                    " words cannot hold one function of n=" +
                                    std::to_string(n_vars));
    }
    Workload w;
    w.seed = seed;
    w.n = n_vars;
    w.words = generate(seed, usable);
    if (n_vars < 6) {
        // one function per word; the unused high bits must stay zero
        const std::uint64_t mask = (std::uint64_t{1} << (1 << n_vars)) - 1;
        for (auto& word : w.words) word &= mask;
    }
    return w;
}

DegreeTables make_degree_tables(int n_vars) {
    return DegreeTables{wlo_bucket(n_vars), masks_direct(n_vars)};
}

BenchRow run_pipeline(PipelineKind kind, const Workload& workload, const DegreeTables& tables) {
    if (workload.n != tables.seq.n) throw std::invalid_argument("table/workload n mismatch");
    const std::size_t per_function = words_per_table(workload.n);
    const std::size_t functions = workload.function_count();
    if (functions == 0) throw std::invalid_argument("workload holds no complete function");

    const std::size_t bytes_per_function = table_size(workload.n);
    const std::size_t chunk =
        std::clamp<std::size_t>(kChunkByteBudget / bytes_per_function, 1, functions);

    std::vector<std::int8_t> degrees(functions);
    double elapsed = 0.0;

    if (pipeline_is_bitwise(kind)) {
        std::vector<std::uint64_t> scratch(chunk * per_function);
        for (std::size_t first = 0; first < functions; first += chunk) {
            const std::size_t batch = std::min(chunk, functions - first);
            std::memcpy(scratch.data(), workload.words.data() + first * per_function,
                        batch * per_function * sizeof(std::uint64_t));
            const auto start = Clock::now();
            for (std::size_t f = 0; f < batch; ++f) {
                degrees[first + f] = static_cast<std::int8_t>(bit_chain(
                    kind, {scratch.data() + f * per_function, per_function}, tables));
            }
            elapsed += seconds_since(start);
        }
    } else {
        std::vector<std::uint8_t> scratch(chunk * bytes_per_function);
        for (std::size_t first = 0; first < functions; first += chunk) {
            const std::size_t batch = std::min(chunk, functions - first);
            for (std::size_t f = 0; f < batch; ++f) {
                unpack_bits({workload.words.data() + (first + f) * per_function, per_function},
                            {scratch.data() + f * bytes_per_function, bytes_per_function});
            }
            const auto start = Clock::now();
            for (std::size_t f = 0; f < batch; ++f) {
                degrees[first + f] = static_cast<std::int8_t>(byte_chain(
                    kind, {scratch.data() + f * bytes_per_function, bytes_per_function},
                    tables.seq));
            }
            elapsed += seconds_since(start);
        }
    }

    return BenchRow{kind, workload.n, functions, elapsed, fold_degrees(degrees)};
}

BenchRow run_pipeline_averaged(PipelineKind kind, const Workload& workload,
                               const DegreeTables& tables, int runs, bool drop_extremes) {
    if (runs < 1) throw std::invalid_argument("need at least one run");
    std::vector<double> times;
    times.reserve(runs);
    BenchRow row{};
    for (int r = 0; r < runs; ++r) {
        const BenchRow current = run_pipeline(kind, workload, tables);
        if (r == 0) {
            row = current;
        } else if (current.checksum != row.checksum) {
            throw std::logic_error("checksum changed between repeated runs");
        }
        times.push_back(current.seconds);
    }
    if (drop_extremes && runs >= 3) {
        std::sort(times.begin(), times.end());
        times.erase(times.begin());
        times.pop_back();
    }
    row.seconds = std::accumulate(times.begin(), times.end(), 0.0) / times.size();
    return row;
}

double measure_loop_overhead(const Workload& workload) {
    const std::size_t per_function = words_per_table(workload.n);
    const std::size_t functions = workload.function_count();
    std::vector<std::int8_t> degrees(functions);
    const auto start = Clock::now();
    for (std::size_t f = 0; f < functions; ++f) {
        degrees[f] = static_cast<std::int8_t>(workload.words[f * per_function] & 1);
    }
    const double elapsed = seconds_since(start);
    fold_degrees(degrees);  // keep the loop observable
    return elapsed;
}

std::string report(std::span<const BenchRow> rows) {
    if (rows.empty()) throw std::invalid_argument("report needs at least one row");
    std::vector<BenchRow> ordered(rows.begin(), rows.end());
    std::sort(ordered.begin(), ordered.end(), [](const BenchRow& a, const BenchRow& b) {
        if (a.pipeline != b.pipeline) return a.pipeline < b.pipeline;
        return a.n < b.n;
    });
    std::string csv = "pipeline,n,functions,seconds,checksum\n";
    for (const BenchRow& row : ordered) {
        char line[160];
        std::snprintf(line, sizeof(line), "%s,%d,%zu,%.3f,0x%016llx\n",
                      std::string(pipeline_name(row.pipeline)).c_str(), row.n, row.functions,
                      row.seconds, static_cast<unsigned long long>(row.checksum));
        csv += line;
    }
    return csv;
}

}  // namespace bfdeg
