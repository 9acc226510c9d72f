#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

#include "bfdeg/truth_table.hpp"
#include "bfdeg/wlo.hpp"

namespace bfdeg {

// Algebraic degree of a Boolean function: minus infinity for the zero
// function, otherwise an integer in [0, n]. Minus infinity is a
// distinct state here; the integer -1 appears only at the CLI/wire
// boundary via sentinel().
class Degree {
  public:
    constexpr Degree() = default;

    static constexpr Degree neg_infinity() { return Degree(-1); }
    static constexpr Degree of(int k);
    // -1 encodes minus infinity; k >= 0 encodes itself.
    static constexpr Degree from_sentinel(int v);

    constexpr bool is_neg_infinity() const { return value_ < 0; }
    // Finite degree; must not be called on the minus-infinity value.
    constexpr int value() const;
    constexpr int sentinel() const { return value_; }

    friend constexpr bool operator==(Degree, Degree) = default;
    friend constexpr auto operator<=>(Degree, Degree) = default;

  private:
    explicit constexpr Degree(int v) : value_(v) {}
    int value_ = -1;
};

constexpr Degree Degree::of(int k) {
    if (k < 0) throw std::invalid_argument("finite degree cannot be negative");
    return Degree(k);
}

constexpr Degree Degree::from_sentinel(int v) {
    if (v < -1) throw std::invalid_argument("degree sentinel below -1");
    return Degree(v);
}

constexpr int Degree::value() const {
    if (value_ < 0) throw std::logic_error("value() called on minus-infinity degree");
    return value_;
}

enum class BytewiseTail { kEs, kWlo };
enum class BitwiseTail { kWlo, kCbWlo };

// The eight measured pipelines: byte-wise family, then bitwise family.
enum class PipelineKind {
    kByteAnftEs,
    kByteAnftWlo,
    kBytePcAnftEs,
    kBytePcAnftWlo,
    kBitAnftWlo,
    kBitAnftCbWlo,
    kBitPcAnftWlo,
    kBitPcAnftCbWlo,
};

inline constexpr std::array<PipelineKind, 8> kAllPipelines = {
    PipelineKind::kByteAnftEs,   PipelineKind::kByteAnftWlo,  PipelineKind::kBytePcAnftEs,
    PipelineKind::kBytePcAnftWlo, PipelineKind::kBitAnftWlo,  PipelineKind::kBitAnftCbWlo,
    PipelineKind::kBitPcAnftWlo, PipelineKind::kBitPcAnftCbWlo,
};

std::string_view pipeline_name(PipelineKind kind);
PipelineKind pipeline_from_name(std::string_view name);  // throws on unknown name
bool pipeline_is_bitwise(PipelineKind kind);
bool pipeline_has_parity_step(PipelineKind kind);

// Exhaustive search: scan every ANF coefficient, keep the maximal
// monomial weight among the set ones. Always touches all 2^n entries.
Degree deg_es(std::span<const std::uint8_t> anf);
Degree deg_es(const ByteTable& anf);

// Walk the WLO sequence from the heaviest layer down; the first set
// coefficient decides the degree, so almost all functions finish after
// a handful of probes.
Degree deg_wlo_bytewise(std::span<const std::uint8_t> anf, const WloSequence& seq);
Degree deg_wlo_bytewise(const ByteTable& anf, const WloSequence& seq);

// Same early-exit idea on packed words: AND the coefficient words
// against each layer mask, highest layer first.
Degree deg_wlo_bitwise(std::span<const std::uint64_t> anf, const MaskSet& masks);
Degree deg_wlo_bitwise(const AnfVector& anf, const MaskSet& masks);

// Probe single packed bits in reverse WLO order. Same result as the
// masked version; cheaper per probe for large n, no masks needed.
Degree deg_cb_wlo(std::span<const std::uint64_t> anf, const WloSequence& seq);
Degree deg_cb_wlo(const AnfVector& anf, const WloSequence& seq);

// Combined method, packed representation: an odd truth-table weight
// forces degree n with no transform at all; otherwise run the bitwise
// ANF transform and the selected tail search.
Degree method_bitwise(const TruthTable& tt, const MaskSet& masks, const WloSequence& seq,
                      BitwiseTail tail);

// Combined method, byte representation.
Degree method_bytewise(const ByteTable& tt, const WloSequence& seq, BytewiseTail tail);

// Diagnostic twin of deg_wlo_bytewise that counts coefficient probes.
// Kept separate so the timed paths stay free of instrumentation.
Degree deg_wlo_bytewise_counted(std::span<const std::uint8_t> anf, const WloSequence& seq,
                                std::uint64_t& probes);

}  // namespace bfdeg
