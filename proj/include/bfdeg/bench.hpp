#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bfdeg/degree.hpp"
#include "bfdeg/wlo.hpp"

namespace bfdeg {

// splitmix64. The exact recurrence is part of the workload contract so
// independent implementations regenerate identical streams:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   output = z ^ (z >> 31)
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

// Deterministic stream of `count` words from the recurrence above.
std::vector<std::uint64_t> generate(std::uint64_t seed, std::size_t count);

// A fully materialized batch of random truth tables: consecutive runs
// of words_per_table(n) words form one function each. The word count is
// rounded down to a whole number of functions.
struct Workload {
    std::uint64_t seed = 0;
    int n = kMinVars;
    std::vector<std::uint64_t> words;

    std::size_t function_count() const { return words.size() / words_per_table(n); }
};

Workload generate_workload(std::uint64_t seed, std::size_t total_words, int n_vars);

// Lookup tables shared by the pipelines; built outside any timed region.
struct DegreeTables {
    WloSequence seq;
    MaskSet masks;
};

DegreeTables make_degree_tables(int n_vars);

struct BenchRow {
    PipelineKind pipeline;
    int n;
    std::size_t functions;
    double seconds;
    std::uint64_t checksum;  // order-sensitive fold of all degrees
};

// Run one pipeline over the whole workload, single-threaded. Only the
// per-function algorithm chain is timed; staging work (copying packed
// words into scratch, expanding to the byte representation) happens
// between timed stretches.
BenchRow run_pipeline(PipelineKind kind, const Workload& workload, const DegreeTables& tables);

// Repeat run_pipeline `runs` times. With drop_extremes and runs >= 3
// the fastest and slowest times are discarded and the rest averaged,
// otherwise all runs are averaged. Checksums must coincide across runs.
BenchRow run_pipeline_averaged(PipelineKind kind, const Workload& workload,
                               const DegreeTables& tables, int runs, bool drop_extremes);

// Timed pass that only reads one word per function: the loop and
// bookkeeping floor any real pipeline sits on.
double measure_loop_overhead(const Workload& workload);

// CSV with header pipeline,n,functions,seconds,checksum; rows sorted by
// pipeline enumeration order, then n ascending. Throws if rows is empty.
std::string report(std::span<const BenchRow> rows);

}  // namespace bfdeg
