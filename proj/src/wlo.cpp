#include "bfdeg/wlo.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bfdeg {

namespace {

void check_sequence_vars(int n_vars) {
    check_var_count(n_vars);
    if (n_vars > kMaxSequenceVars) {
        throw std::invalid_argument("full sequence/mask generation is capped at n=" +
                                    std::to_string(kMaxSequenceVars) +
                                    "; use layer_mask for larger n");
    }
}

std::vector<std::uint64_t> layer_prefix_sums(int n_vars) {
    std::vector<std::uint64_t> start(n_vars + 2, 0);
    for (int k = 0; k <= n_vars; ++k) start[k + 1] = start[k] + binomial(n_vars, k);
    return start;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * static_cast<std::uint64_t>(n - k + i) / i;
    }
    return result;
}

WloSequence wlo_bucket(int n_vars) {
    check_sequence_vars(n_vars);
    WloSequence seq;
    seq.n = n_vars;
    seq.layer_start = layer_prefix_sums(n_vars);
    seq.order.resize(table_size(n_vars));
    std::vector<std::uint64_t> next(seq.layer_start.begin(), seq.layer_start.end() - 1);
    for (std::uint64_t i = 0; i < table_size(n_vars); ++i) {
        seq.order[next[std::popcount(i)]++] = static_cast<std::uint32_t>(i);
    }
    return seq;
}

WloSequence wlo_recursive(int n_vars) {
    check_sequence_vars(n_vars);
    std::vector<std::vector<std::uint32_t>> layers = {{0}, {1}};
    for (int m = 2; m <= n_vars; ++m) {
        const std::uint32_t top_bit = std::uint32_t{1} << (m - 1);
        std::vector<std::vector<std::uint32_t>> grown(m + 1);
        for (int k = 0; k <= m; ++k) {
            if (k < m) grown[k] = layers[k];
            if (k > 0) {
                for (std::uint32_t v : layers[k - 1]) grown[k].push_back(v + top_bit);
            }
        }
        layers = std::move(grown);
    }
    WloSequence seq;
    seq.n = n_vars;
    seq.order.reserve(table_size(n_vars));
    seq.layer_start.reserve(n_vars + 2);
    seq.layer_start.push_back(0);
    for (const auto& layer : layers) {
        seq.order.insert(seq.order.end(), layer.begin(), layer.end());
        seq.layer_start.push_back(seq.order.size());
    }
    return seq;
}

MaskSet::MaskSet(int n_vars, std::vector<std::uint64_t> layer_words)
    : n(n_vars), storage(std::move(layer_words)) {
    check_sequence_vars(n);
    const std::size_t expected = (static_cast<std::size_t>(n) + 1) * words_per_table(n);
    if (storage.size() != expected) {
        throw std::invalid_argument("mask storage has " + std::to_string(storage.size()) +
                                    " words, expected " + std::to_string(expected));
    }
}

MaskSet masks_direct(int n_vars) {
    check_sequence_vars(n_vars);
    const std::size_t stride = words_per_table(n_vars);
    std::vector<std::uint64_t> storage((static_cast<std::size_t>(n_vars) + 1) * stride, 0);
    for (std::uint64_t i = 0; i < table_size(n_vars); ++i) {
        const auto k = static_cast<std::size_t>(std::popcount(i));
        storage[k * stride + (i >> 6)] |= std::uint64_t{1} << (i & 63);
    }
    return MaskSet(n_vars, std::move(storage));
}

MaskSet masks_from_wlo(const WloSequence& seq) {
    check_sequence_vars(seq.n);
    const std::size_t stride = words_per_table(seq.n);
    std::vector<std::uint64_t> storage((static_cast<std::size_t>(seq.n) + 1) * stride, 0);
    for (int k = 0; k <= seq.n; ++k) {
        for (std::uint64_t p = seq.layer_start[k]; p < seq.layer_start[k + 1]; ++p) {
            const std::uint32_t i = seq.order[p];
            storage[static_cast<std::size_t>(k) * stride + (i >> 6)] |= std::uint64_t{1}
                                                                        << (i & 63);
        }
    }
    return MaskSet(seq.n, std::move(storage));
}

std::vector<std::uint64_t> layer_mask(int n_vars, int k) {
    check_var_count(n_vars);
    if (k < 0 || k > n_vars) {
        throw std::invalid_argument("layer index " + std::to_string(k) + " out of range [0, " +
                                    std::to_string(n_vars) + "]");
    }
    std::vector<std::uint64_t> mask(words_per_table(n_vars), 0);
    for (std::uint64_t i = 0; i < table_size(n_vars); ++i) {
        if (std::popcount(i) == k) mask[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return mask;
}

}  // namespace bfdeg
