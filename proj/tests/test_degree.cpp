#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "bfdeg/anf.hpp"
#include "bfdeg/degree.hpp"
#include "bfdeg/oracle.hpp"
#include "test_util.hpp"

using namespace bfdeg;
using bfdeg::testing::byte_table_from_bits;
using bfdeg::testing::random_byte_table;

namespace {

ByteTable anf_with_ones(int n, std::initializer_list<std::uint64_t> indices) {
    ByteTable anf = ByteTable::zeros(n);
    for (std::uint64_t i : indices) anf.values[i] = 1;
    return anf;
}

}  // namespace

TEST_CASE("degree value semantics") {
    CHECK(Degree::neg_infinity().is_neg_infinity());
    CHECK(Degree::neg_infinity().sentinel() == -1);
    CHECK(Degree::of(3).value() == 3);
    CHECK(Degree::neg_infinity() < Degree::of(0));
    CHECK(Degree::of(2) < Degree::of(5));
    CHECK(Degree::from_sentinel(-1) == Degree::neg_infinity());
    CHECK_THROWS_AS(Degree::neg_infinity().value(), std::logic_error);
    CHECK_THROWS_AS(Degree::of(-2), std::invalid_argument);
}

TEST_CASE("pipeline names round trip") {
    for (PipelineKind kind : kAllPipelines) {
        CHECK(pipeline_from_name(pipeline_name(kind)) == kind);
    }
    CHECK_THROWS_AS(pipeline_from_name("bit:WRONG"), std::invalid_argument);
    CHECK(pipeline_is_bitwise(PipelineKind::kBitAnftWlo));
    CHECK(!pipeline_is_bitwise(PipelineKind::kBytePcAnftWlo));
    CHECK(pipeline_has_parity_step(PipelineKind::kBytePcAnftWlo));
    CHECK(!pipeline_has_parity_step(PipelineKind::kBitAnftCbWlo));
}

TEST_CASE("exhaustive search on the coefficient vector") {
    CHECK(deg_es(ByteTable::zeros(3)) == Degree::neg_infinity());
    CHECK(deg_es(anf_with_ones(3, {0})) == Degree::of(0));
    CHECK(deg_es(anf_with_ones(3, {1, 6})) == Degree::of(2));
}

TEST_CASE("bytewise WLO walk") {
    const WloSequence seq = wlo_bucket(4);
    CHECK(deg_wlo_bytewise(ByteTable::zeros(4), seq) == Degree::neg_infinity());

    std::uint64_t probes = 0;
    CHECK(deg_wlo_bytewise_counted(anf_with_ones(4, {15}).values, seq, probes) == Degree::of(4));
    CHECK(probes == 1);  // index 15 sits at the end of the sequence

    CHECK(deg_wlo_bytewise(anf_with_ones(4, {3, 5}), seq) ==
          deg_es(anf_with_ones(4, {3, 5})));
}

TEST_CASE("bitwise masked search") {
    const MaskSet masks = masks_direct(3);
    CHECK(deg_wlo_bitwise(AnfVector(3, {0x00}), masks) == Degree::neg_infinity());
    CHECK(deg_wlo_bitwise(AnfVector(3, {0x01}), masks) == Degree::of(0));
    CHECK(deg_wlo_bitwise(AnfVector(3, {0x80}), masks) == Degree::of(3));
}

TEST_CASE("bit probing in reverse WLO order") {
    const WloSequence seq4 = wlo_bucket(4);
    CHECK(deg_cb_wlo(AnfVector(4, {0x0}), seq4) == Degree::neg_infinity());
    CHECK(deg_cb_wlo(AnfVector(4, {std::uint64_t{1} << 15}), seq4) == Degree::of(4));

    SplitMix64 rng(31);
    const WloSequence seq10 = wlo_bucket(10);
    const MaskSet masks10 = masks_direct(10);
    for (int rep = 0; rep < 200; ++rep) {
        AnfVector anf;
        anf.n = 10;
        anf.words.assign(words_per_table(10), 0);
        for (auto& w : anf.words) w = rng.next();
        REQUIRE(deg_cb_wlo(anf, seq10) == deg_wlo_bitwise(anf, masks10));
    }
}

TEST_CASE("combined method, packed input") {
    const DegreeTables t = make_degree_tables(6);
    CHECK(method_bitwise(TruthTable(6, {0x1}), t.masks, t.seq, BitwiseTail::kWlo) ==
          Degree::of(6));  // odd weight short-circuits
    CHECK(method_bitwise(TruthTable(6, {~std::uint64_t{0}}), t.masks, t.seq,
                         BitwiseTail::kCbWlo) == Degree::of(0));
    CHECK(method_bitwise(TruthTable::zeros(6), t.masks, t.seq, BitwiseTail::kWlo) ==
          Degree::neg_infinity());
}

TEST_CASE("combined method, byte input") {
    const DegreeTables t = make_degree_tables(4);
    ByteTable single = ByteTable::zeros(4);
    single.values[5] = 1;
    CHECK(method_bytewise(single, t.seq, BytewiseTail::kEs) == Degree::of(4));
    CHECK(method_bytewise(ByteTable(4, std::vector<std::uint8_t>(16, 1)), t.seq,
                          BytewiseTail::kWlo) == Degree::of(0));

    SplitMix64 rng(37);
    const DegreeTables t8 = make_degree_tables(8);
    for (int rep = 0; rep < 200; ++rep) {
        const ByteTable f = random_byte_table(rng, 8);
        const Degree via_bytes = method_bytewise(f, t8.seq, BytewiseTail::kWlo);
        const Degree via_bits = method_bitwise(pack(f), t8.masks, t8.seq, BitwiseTail::kWlo);
        REQUIRE(via_bytes == via_bits);
    }
}

TEST_CASE("reference oracle") {
    CHECK(deg_oracle(ByteTable(1, {0, 1})) == Degree::of(1));
    CHECK(deg_oracle(ByteTable::zeros(2)) == Degree::neg_infinity());
    CHECK(deg_oracle(ByteTable(2, {0, 0, 0, 1})) == Degree::of(2));  // AND
    CHECK_THROWS_AS(deg_oracle(ByteTable::zeros(11)), std::invalid_argument);
}

TEST_CASE("all algorithms agree on random functions, oracle included") {
    SplitMix64 rng(41);
    for (int n : {6, 10}) {
        const DegreeTables t = make_degree_tables(n);
        for (int rep = 0; rep < 150; ++rep) {
            const ByteTable f = random_byte_table(rng, n);
            const ByteTable anf_b = anft_bytewise(f);
            const AnfVector anf_w = anft_bitwise(pack(f));
            const Degree expected = deg_oracle(f);
            REQUIRE(deg_es(anf_b) == expected);
            REQUIRE(deg_wlo_bytewise(anf_b, t.seq) == expected);
            REQUIRE(deg_wlo_bitwise(anf_w, t.masks) == expected);
            REQUIRE(deg_cb_wlo(anf_w, t.seq) == expected);
            REQUIRE(method_bitwise(pack(f), t.masks, t.seq, BitwiseTail::kCbWlo) == expected);
            REQUIRE(method_bytewise(f, t.seq, BytewiseTail::kEs) == expected);
        }
    }
}

TEST_CASE("all algorithms agree on 10^4 random functions per n") {
    SplitMix64 rng(53);
    for (int n : {6, 10, 16}) {
        const DegreeTables t = make_degree_tables(n);
        std::vector<std::uint64_t> words(words_per_table(n));
        std::vector<std::uint8_t> bytes(table_size(n));
        std::uint64_t mismatches = 0;
        for (int rep = 0; rep < 10'000; ++rep) {
            for (auto& w : words) w = rng.next();
            if (n < 6) words[0] &= (std::uint64_t{1} << (1 << n)) - 1;
            unpack_bits(words, bytes);
            anft_bitwise_inplace(words, n);
            anft_bytewise_inplace(bytes);
            const Degree expected = deg_es(std::span<const std::uint8_t>(bytes));
            if (deg_wlo_bytewise(std::span<const std::uint8_t>(bytes), t.seq) != expected ||
                deg_wlo_bitwise(std::span<const std::uint64_t>(words), t.masks) != expected ||
                deg_cb_wlo(std::span<const std::uint64_t>(words), t.seq) != expected) {
                ++mismatches;
            }
        }
        REQUIRE(mismatches == 0);
    }
}

TEST_CASE("odd weight forces maximal degree and vice versa") {
    SplitMix64 rng(43);
    const int n = 8;
    const DegreeTables t = make_degree_tables(n);
    for (int rep = 0; rep < 400; ++rep) {
        const ByteTable f = random_byte_table(rng, n);
        const bool odd = weight_bytes(f) & 1;
        const bool maximal =
            method_bytewise(f, t.seq, BytewiseTail::kWlo) == Degree::of(n);
        REQUIRE(odd == maximal);
    }
}

TEST_CASE("probe count stays within n+2 for the two top layers") {
    SplitMix64 rng(47);
    const int n = 8;
    const WloSequence seq = wlo_bucket(n);
    int tested = 0;
    while (tested < 200) {
        ByteTable f = random_byte_table(rng, n);
        if (weight_bytes(f) & 1) continue;  // even weight keeps the degree below n
        const ByteTable anf = anft_bytewise(f);
        const Degree d = deg_es(anf);
        if (d != Degree::of(n - 1)) continue;
        std::uint64_t probes = 0;
        REQUIRE(deg_wlo_bytewise_counted(anf.values, seq, probes) == d);
        REQUIRE(probes <= static_cast<std::uint64_t>(n) + 2);
        ++tested;
    }
}

TEST_CASE("mismatched argument sizes are rejected") {
    const DegreeTables t4 = make_degree_tables(4);
    CHECK_THROWS_AS(deg_wlo_bytewise(ByteTable::zeros(3), t4.seq), std::invalid_argument);
    CHECK_THROWS_AS(method_bitwise(TruthTable::zeros(6), t4.masks, t4.seq, BitwiseTail::kWlo),
                    std::invalid_argument);
}
