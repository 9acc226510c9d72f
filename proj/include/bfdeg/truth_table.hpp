#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bfdeg {

inline constexpr int kMinVars = 1;
// 2^30 table bits = 128 MiB packed; larger tables are out of scope.
inline constexpr int kMaxVars = 30;

// Number of entries in the truth table of an n-variable function.
constexpr std::uint64_t table_size(int n_vars) {
    return std::uint64_t{1} << n_vars;
}

// Number of 64-bit words holding a 2^n-bit table: max(1, 2^(n-6)).
constexpr std::size_t words_per_table(int n_vars) {
    return n_vars < 6 ? 1 : std::size_t{1} << (n_vars - 6);
}

// Throws std::invalid_argument unless kMinVars <= n_vars <= kMaxVars.
void check_var_count(int n_vars);

// Bit-packed truth table. Table index i lives in word i/64 at bit
// position i%64, where bit b of a word has numeric weight 2^b; that
// makes index-to-mask extraction a single shift. For n < 6 the single
// word keeps its upper 64 - 2^n bits zero, so every word-level
// algorithm runs unmodified on small tables.
struct TruthTable {
    int n = kMinVars;
    std::vector<std::uint64_t> words = std::vector<std::uint64_t>(1, 0);

    TruthTable() = default;
    TruthTable(int n_vars, std::vector<std::uint64_t> table_words);

    static TruthTable zeros(int n_vars);

    bool bit(std::uint64_t index) const {
        return (words[index >> 6] >> (index & 63)) & 1;
    }
};

// ANF coefficient vector, same packed layout as TruthTable. Bit g is
// the coefficient of the monomial whose exponent set is the binary
// expansion of g; the monomial's degree is popcount(g).
struct AnfVector {
    int n = kMinVars;
    std::vector<std::uint64_t> words = std::vector<std::uint64_t>(1, 0);

    AnfVector() = default;
    AnfVector(int n_vars, std::vector<std::uint64_t> coeff_words);

    bool bit(std::uint64_t index) const {
        return (words[index >> 6] >> (index & 63)) & 1;
    }
};

// One function value per byte; values[i] = f at input with serial
// number i, each byte 0 or 1.
struct ByteTable {
    int n = kMinVars;
    std::vector<std::uint8_t> values = std::vector<std::uint8_t>(2, 0);

    ByteTable() = default;
    ByteTable(int n_vars, std::vector<std::uint8_t> table_values);

    static ByteTable zeros(int n_vars);
};

// Span kernels. No argument validation; callers guarantee the packed
// layout above and matching lengths. The typed wrappers below validate.
void pack_bits(std::span<const std::uint8_t> values, std::span<std::uint64_t> words);
void unpack_bits(std::span<const std::uint64_t> words, std::span<std::uint8_t> values);
std::uint64_t weight_of_words(std::span<const std::uint64_t> words);
std::uint64_t weight_of_bytes(std::span<const std::uint8_t> values);

// Parity of the table weight via XOR folding: XOR all words into one
// accumulator, fold it by shifts 32,16,8,4,2,1, take the low bit.
int parity_of_words(std::span<const std::uint64_t> words);

TruthTable pack(const ByteTable& bytes);
ByteTable unpack(const TruthTable& tt);
AnfVector pack_anf(const ByteTable& bytes);
ByteTable unpack_anf(const AnfVector& anf);

std::uint64_t weight_bytes(const ByteTable& bytes);
std::uint64_t weight_words(const TruthTable& tt);
int parity_check(const TruthTable& tt);
int parity_check_bytes(const ByteTable& bytes);

// Text form: ASCII '0'/'1' string of length 2^n, character j = f_j.
TruthTable truth_table_from_text(std::string_view bits, int n_vars);
std::string truth_table_to_text(const TruthTable& tt);
std::string anf_to_text(const AnfVector& anf);

// Binary form: little-endian 64-bit words, word i at byte offset 8i;
// the file must hold exactly 8 * words_per_table(n) bytes.
TruthTable read_truth_table(const std::string& path, int n_vars);
void write_packed_words(const std::string& path, std::span<const std::uint64_t> words);

}  // namespace bfdeg
