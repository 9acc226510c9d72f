#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bfdeg/anf.hpp"
#include "bfdeg/oracle.hpp"
#include "test_util.hpp"

using namespace bfdeg;
using bfdeg::testing::byte_table_from_bits;
using bfdeg::testing::random_byte_table;

TEST_CASE("constant functions") {
    for (int n : {1, 3, 6, 8}) {
        const ByteTable ones(n, std::vector<std::uint8_t>(table_size(n), 1));
        const ByteTable anf = anft_bytewise(ones);
        CHECK(anf.values[0] == 1);
        CHECK(weight_bytes(anf) == 1);

        CHECK(weight_bytes(anft_bytewise(ByteTable::zeros(n))) == 0);
    }
    CHECK(anft_bitwise(TruthTable(6, {0xFFFFFFFFFFFFFFFFULL})).words ==
          std::vector<std::uint64_t>{0x1});
    CHECK(anft_bitwise(TruthTable(2, {0xF})).words == std::vector<std::uint64_t>{0x1});
}

TEST_CASE("projection x_n has a single linear coefficient") {
    // f = x_3 on three variables: value 1 exactly at odd serial numbers.
    const ByteTable f = byte_table_from_bits(0b10101010, 3);
    const ByteTable anf = anft_bytewise(f);
    for (std::uint64_t i = 0; i < 8; ++i) CHECK(anf.values[i] == (i == 1 ? 1 : 0));
}

TEST_CASE("oracle basics") {
    CHECK(anf_oracle(ByteTable(1, {0, 1})).values == std::vector<std::uint8_t>{0, 1});
    CHECK(weight_bytes(anf_oracle(ByteTable::zeros(3))) == 0);
}

TEST_CASE("oracle equivalence, exhaustive n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t size = table_size(n);
        std::uint64_t mismatches = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
            const ByteTable f = byte_table_from_bits(bits, n);
            if (anft_bytewise(f).values != anf_oracle(f).values) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("oracle equivalence, random n = 5..10") {
    SplitMix64 rng(17);
    for (int n = 5; n <= 10; ++n) {
        std::uint64_t mismatches = 0;
        for (int rep = 0; rep < 1000; ++rep) {
            const ByteTable f = random_byte_table(rng, n);
            if (anft_bytewise(f).values != anf_oracle(f).values) ++mismatches;
        }
        REQUIRE(mismatches == 0);
    }
}

TEST_CASE("involution") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t size = table_size(n);
        std::uint64_t mismatches = 0;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << size); ++bits) {
            const ByteTable f = byte_table_from_bits(bits, n);
            if (anft_bytewise(anft_bytewise(f)).values != f.values) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
    SplitMix64 rng(19);
    for (int n : {6, 12}) {
        for (int rep = 0; rep < 100; ++rep) {
            const ByteTable f = random_byte_table(rng, n);
            REQUIRE(anft_bytewise(anft_bytewise(f)).values == f.values);
        }
    }
}

TEST_CASE("bitwise transform agrees with bytewise on packed input") {
    SplitMix64 rng(23);
    for (int n : {1, 2, 5, 6, 7, 10, 16}) {
        for (int rep = 0; rep < 40; ++rep) {
            const ByteTable f = random_byte_table(rng, n);
            const AnfVector bitwise = anft_bitwise(pack(f));
            REQUIRE(bitwise.words == pack_anf(anft_bytewise(f)).words);
        }
    }
}

TEST_CASE("linearity over XOR") {
    SplitMix64 rng(29);
    for (int n : {4, 8, 12}) {
        for (int rep = 0; rep < 50; ++rep) {
            const ByteTable a = random_byte_table(rng, n);
            const ByteTable b = random_byte_table(rng, n);
            ByteTable sum = a;
            for (std::uint64_t i = 0; i < sum.values.size(); ++i) sum.values[i] ^= b.values[i];
            const ByteTable anf_a = anft_bytewise(a);
            const ByteTable anf_b = anft_bytewise(b);
            ByteTable anf_sum = anft_bytewise(sum);
            for (std::uint64_t i = 0; i < sum.values.size(); ++i) {
                REQUIRE(anf_sum.values[i] == (anf_a.values[i] ^ anf_b.values[i]));
            }
        }
    }
}
