#include "bfdeg/anf.hpp"

#include <array>

namespace bfdeg {

namespace {

// In-word stage masks, derived from the index-to-bit mapping: mask d
// selects the bit positions whose index has bit d set. The update
//   w ^= (w << 2^d) & mask[d]
// then XORs position j-2^d into position j exactly for those targets.
consteval std::array<std::uint64_t, 6> make_stage_masks() {
    std::array<std::uint64_t, 6> masks{};
    for (int d = 0; d < 6; ++d) {
        for (int b = 0; b < 64; ++b) {
            if ((b >> d) & 1) masks[d] |= std::uint64_t{1} << b;
        }
    }
    return masks;
}

constexpr std::array<std::uint64_t, 6> kStageMask = make_stage_masks();

}  // namespace

void anft_bytewise_inplace(std::span<std::uint8_t> values) {
    const std::size_t size = values.size();
    for (std::size_t half = 1; half < size; half <<= 1) {
        for (std::size_t base = 0; base < size; base += 2 * half) {
            for (std::size_t j = 0; j < half; ++j) {
                values[base + half + j] ^= values[base + j];
            }
        }
    }
}

void anft_bitwise_inplace(std::span<std::uint64_t> words, int n_vars) {
    const int in_word = n_vars < 6 ? n_vars : 6;
    for (int d = 0; d < in_word; ++d) {
        const std::uint64_t mask = kStageMask[d];
        const int shift = 1 << d;
        for (auto& w : words) w ^= (w << shift) & mask;
    }
    for (int d = 6; d < n_vars; ++d) {
        const std::size_t half = std::size_t{1} << (d - 6);
        for (std::size_t base = 0; base < words.size(); base += 2 * half) {
            for (std::size_t j = 0; j < half; ++j) {
                words[base + half + j] ^= words[base + j];
            }
        }
    }
}

ByteTable anft_bytewise(const ByteTable& tt) {
    ByteTable anf = tt;
    anft_bytewise_inplace(anf.values);
    return anf;
}

AnfVector anft_bitwise(const TruthTable& tt) {
    AnfVector anf;
    anf.n = tt.n;
    anf.words = tt.words;
    anft_bitwise_inplace(anf.words, anf.n);
    return anf;
}

}  // namespace bfdeg
