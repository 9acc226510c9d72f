#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "bfdeg/bench.hpp"

using namespace bfdeg;

TEST_CASE("splitmix64 golden values") {
    // Frozen from the documented recurrence, computed independently.
    SplitMix64 a(0);
    CHECK(a.next() == 0xE220A8397B1DCDAFULL);
    CHECK(a.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(a.next() == 0x06C45D188009454FULL);
    SplitMix64 b(1);
    CHECK(b.next() == 0x910A2DEC89025CC1ULL);
    SplitMix64 c(0x123456789ABCDEFULL);
    CHECK(c.next() == 0x157A3807A48FAA9DULL);
}

TEST_CASE("stream matches a from-scratch reimplementation") {
    std::uint64_t state = 99;
    SplitMix64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        REQUIRE(rng.next() == z);
    }
}

TEST_CASE("same seed, same stream") {
    CHECK(generate(7, 4096) == generate(7, 4096));
    CHECK(generate(7, 4096) != generate(8, 4096));
}

TEST_CASE("popcount parity of a long stream is self-consistent") {
    const auto words = generate(42, 1'000'000);
    std::uint64_t folded = 0;
    std::uint64_t total = 0;
    for (std::uint64_t w : words) {
        folded ^= w;
        total += static_cast<unsigned>(std::popcount(w));
    }
    CHECK((total & 1) == (static_cast<unsigned>(std::popcount(folded)) & 1));
    CHECK((total & 1) == 0);  // frozen for seed 42, 10^6 words
}

TEST_CASE("workload rounds down to whole functions") {
    const Workload w = generate_workload(1, 1030, 10);  // 16 words per function
    CHECK(w.words.size() == 1024);
    CHECK(w.function_count() == 64);
    CHECK_THROWS_AS(generate_workload(1, 10, 10), std::invalid_argument);
}

TEST_CASE("all eight pipelines agree on the checksum") {
    for (int n : {4, 6, 8}) {
        const Workload w = generate_workload(5, 4096, n);
        const DegreeTables tables = make_degree_tables(n);
        const BenchRow first = run_pipeline(kAllPipelines[0], w, tables);
        CHECK(first.functions == w.function_count());
        for (PipelineKind kind : kAllPipelines) {
            const BenchRow row = run_pipeline(kind, w, tables);
            REQUIRE(row.checksum == first.checksum);
            REQUIRE(row.functions == first.functions);
        }
    }
}

TEST_CASE("repeated runs keep the checksum and average the time") {
    const Workload w = generate_workload(5, 2048, 6);
    const DegreeTables tables = make_degree_tables(6);
    const BenchRow row =
        run_pipeline_averaged(PipelineKind::kBitPcAnftWlo, w, tables, 5, true);
    CHECK(row.checksum == run_pipeline(PipelineKind::kBitPcAnftWlo, w, tables).checksum);
    CHECK(row.seconds >= 0.0);
}

TEST_CASE("parity-check rows do not run slower than their plain counterparts") {
    // Half of all random functions short-circuit, so the PC row does
    // roughly half the transform work. Averaged runs keep noise down.
    const Workload w = generate_workload(3, 200'000, 8);
    const DegreeTables tables = make_degree_tables(8);
    const BenchRow plain =
        run_pipeline_averaged(PipelineKind::kByteAnftWlo, w, tables, 5, true);
    const BenchRow pc =
        run_pipeline_averaged(PipelineKind::kBytePcAnftWlo, w, tables, 5, true);
    CHECK(pc.checksum == plain.checksum);
    CHECK(pc.seconds <= plain.seconds * 1.2);
}

TEST_CASE("loop overhead sits well under a real pipeline") {
    const Workload w = generate_workload(3, 400'000, 10);
    const DegreeTables tables = make_degree_tables(10);
    const double overhead = measure_loop_overhead(w);
    const BenchRow real = run_pipeline(PipelineKind::kBitPcAnftWlo, w, tables);
    CHECK(overhead <= real.seconds);
}

TEST_CASE("CSV report") {
    CHECK_THROWS_AS(report({}), std::invalid_argument);

    const Workload w = generate_workload(5, 1024, 6);
    const DegreeTables tables = make_degree_tables(6);
    std::vector<BenchRow> rows;
    for (PipelineKind kind : kAllPipelines) rows.push_back(run_pipeline(kind, w, tables));
    std::reverse(rows.begin(), rows.end());

    const std::string csv = report(rows);
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "pipeline,n,functions,seconds,checksum");
    std::getline(lines, line);
    CHECK(line.starts_with("byte:ANFT+ES,6,1024,"));  // sorted despite reversed input
    int rows_seen = 1;
    while (std::getline(lines, line)) ++rows_seen;
    CHECK(rows_seen == 8);
}
