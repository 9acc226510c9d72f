#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bfdeg/truth_table.hpp"

namespace bfdeg {

// Full sequences and mask sets are materialized up to this many
// variables; beyond it use layer_mask() to build one layer at a time.
inline constexpr int kMaxSequenceVars = 26;

// Exact binomial coefficient, overflow-free for the n <= 30 used here.
std::uint64_t binomial(int n, int k);

// Weight-lexicographic order of {0,...,2^n-1}: ascending weight first,
// ascending value inside each weight layer. layer_start has n+2 prefix
// sums, so layer k occupies order[layer_start[k] .. layer_start[k+1]).
struct WloSequence {
    int n = kMinVars;
    std::vector<std::uint32_t> order;
    std::vector<std::uint64_t> layer_start;
};

// Single pass in index order, dropping each index into its weight
// bucket; bucket concatenation is the WLO sequence.
WloSequence wlo_bucket(int n_vars);

// Recursive construction: layer k over m variables is layer k over m-1
// variables followed by layer k-1 shifted up by 2^(m-1). Produces the
// same sequence as wlo_bucket.
WloSequence wlo_recursive(int n_vars);

// Characteristic masks of the weight layers in packed-word layout:
// bit i of layer k is set iff popcount(i) == k. Layers are disjoint
// and cover all table bits.
struct MaskSet {
    int n = kMinVars;
    std::vector<std::uint64_t> storage;  // n+1 layers, each words_per_table(n) words

    MaskSet() = default;
    MaskSet(int n_vars, std::vector<std::uint64_t> layer_words);

    std::span<const std::uint64_t> layer(int k) const {
        const std::size_t stride = words_per_table(n);
        return {storage.data() + static_cast<std::size_t>(k) * stride, stride};
    }
};

// Masks straight from the weight definition, no sequence needed.
MaskSet masks_direct(int n_vars);

// Masks by setting the bits listed in each layer of a WLO sequence.
MaskSet masks_from_wlo(const WloSequence& seq);

// One layer's mask on demand; works up to kMaxVars.
std::vector<std::uint64_t> layer_mask(int n_vars, int k);

}  // namespace bfdeg
