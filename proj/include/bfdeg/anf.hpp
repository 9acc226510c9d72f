#pragma once

#include <cstdint>
#include <span>

#include "bfdeg/truth_table.hpp"

namespace bfdeg {

// In-place ANF (Mobius) transform on a byte table of length 2^n.
// Standard butterfly: for each dimension d ascending, every entry whose
// index has bit d set absorbs the entry 2^d below it. Self-inverse.
void anft_bytewise_inplace(std::span<std::uint8_t> values);

// In-place ANF transform on packed words. Dimensions 0..5 run inside
// each word with a shift-and-mask update; dimensions 6..n-1 XOR whole
// words across the array. Bit-exact with the byte-wise transform.
void anft_bitwise_inplace(std::span<std::uint64_t> words, int n_vars);

// Value-in/value-out wrappers.
ByteTable anft_bytewise(const ByteTable& tt);
AnfVector anft_bitwise(const TruthTable& tt);

}  // namespace bfdeg
