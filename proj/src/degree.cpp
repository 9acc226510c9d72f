#include "bfdeg/degree.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

#include "bfdeg/anf.hpp"

namespace bfdeg {

namespace {

void check_same_n(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("variable counts differ: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

// Reverse walk over the WLO sequence shared by the byte-wise and the
// bit-probing searches. layer_start[k] <= p < layer_start[k+1] keeps k
// in step with p, so the layer of the first hit is known for free.
template <typename Probe>
Degree reverse_wlo_walk(const WloSequence& seq, Probe&& probe) {
    int k = seq.n;
    for (std::uint64_t p = seq.order.size(); p-- > 0;) {
        while (p < seq.layer_start[k]) --k;
        if (probe(seq.order[p])) return Degree::of(k);
    }
    return Degree::neg_infinity();
}

}  // namespace

std::string_view pipeline_name(PipelineKind kind) {
    switch (kind) {
        case PipelineKind::kByteAnftEs: return "byte:ANFT+ES";
        case PipelineKind::kByteAnftWlo: return "byte:ANFT+WLO";
        case PipelineKind::kBytePcAnftEs: return "byte:PC+ANFT+ES";
        case PipelineKind::kBytePcAnftWlo: return "byte:PC+ANFT+WLO";
        case PipelineKind::kBitAnftWlo: return "bit:ANFT+WLO";
        case PipelineKind::kBitAnftCbWlo: return "bit:ANFT+CBWLO";
        case PipelineKind::kBitPcAnftWlo: return "bit:PC+ANFT+WLO";
        case PipelineKind::kBitPcAnftCbWlo: return "bit:PC+ANFT+CBWLO";
    }
    throw std::logic_error("unreachable pipeline kind");
}

PipelineKind pipeline_from_name(std::string_view name) {
    for (PipelineKind kind : kAllPipelines) {
        if (pipeline_name(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown pipeline '" + std::string(name) + "'");
}

bool pipeline_is_bitwise(PipelineKind kind) {
    return kind == PipelineKind::kBitAnftWlo || kind == PipelineKind::kBitAnftCbWlo ||
           kind == PipelineKind::kBitPcAnftWlo || kind == PipelineKind::kBitPcAnftCbWlo;
}

bool pipeline_has_parity_step(PipelineKind kind) {
    return kind == PipelineKind::kBytePcAnftEs || kind == PipelineKind::kBytePcAnftWlo ||
           kind == PipelineKind::kBitPcAnftWlo || kind == PipelineKind::kBitPcAnftCbWlo;
}

Degree deg_es(std::span<const std::uint8_t> anf) {
    int best = -1;
    for (std::uint64_t i = 0; i < anf.size(); ++i) {
        if (anf[i]) {
            const int w = std::popcount(i);
            if (w > best) best = w;
        }
    }
    return Degree::from_sentinel(best);
}

Degree deg_es(const ByteTable& anf) { return deg_es(std::span<const std::uint8_t>(anf.values)); }

Degree deg_wlo_bytewise(std::span<const std::uint8_t> anf, const WloSequence& seq) {
    return reverse_wlo_walk(seq, [anf](std::uint32_t i) { return anf[i] != 0; });
}

Degree deg_wlo_bytewise(const ByteTable& anf, const WloSequence& seq) {
    check_same_n(anf.n, seq.n);
    return deg_wlo_bytewise(std::span<const std::uint8_t>(anf.values), seq);
}

Degree deg_wlo_bytewise_counted(std::span<const std::uint8_t> anf, const WloSequence& seq,
                                std::uint64_t& probes) {
    return reverse_wlo_walk(seq, [anf, &probes](std::uint32_t i) {
        ++probes;
        return anf[i] != 0;
    });
}

Degree deg_wlo_bitwise(std::span<const std::uint64_t> anf, const MaskSet& masks) {
    for (int k = masks.n; k >= 0; --k) {
        const auto mask = masks.layer(k);
        for (std::size_t col = 0; col < anf.size(); ++col) {
            if (anf[col] & mask[col]) return Degree::of(k);
        }
    }
    return Degree::neg_infinity();
}

Degree deg_wlo_bitwise(const AnfVector& anf, const MaskSet& masks) {
    check_same_n(anf.n, masks.n);
    return deg_wlo_bitwise(std::span<const std::uint64_t>(anf.words), masks);
}

Degree deg_cb_wlo(std::span<const std::uint64_t> anf, const WloSequence& seq) {
    return reverse_wlo_walk(
        seq, [anf](std::uint32_t i) { return (anf[i >> 6] >> (i & 63)) & 1; });
}

Degree deg_cb_wlo(const AnfVector& anf, const WloSequence& seq) {
    check_same_n(anf.n, seq.n);
    return deg_cb_wlo(std::span<const std::uint64_t>(anf.words), seq);
}

Degree method_bitwise(const TruthTable& tt, const MaskSet& masks, const WloSequence& seq,
                      BitwiseTail tail) {
    check_same_n(tt.n, masks.n);
    check_same_n(tt.n, seq.n);
    if (parity_of_words(tt.words)) return Degree::of(tt.n);
    std::vector<std::uint64_t> anf = tt.words;
    anft_bitwise_inplace(anf, tt.n);
    return tail == BitwiseTail::kWlo ? deg_wlo_bitwise(anf, masks) : deg_cb_wlo(anf, seq);
}

Degree method_bytewise(const ByteTable& tt, const WloSequence& seq, BytewiseTail tail) {
    check_same_n(tt.n, seq.n);
    if (weight_of_bytes(tt.values) & 1) return Degree::of(tt.n);
    std::vector<std::uint8_t> anf = tt.values;
    anft_bytewise_inplace(anf);
    return tail == BytewiseTail::kEs ? deg_es(std::span<const std::uint8_t>(anf))
                                     : deg_wlo_bytewise(anf, seq);
}

}  // namespace bfdeg
