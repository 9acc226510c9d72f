#include "bfdeg/truth_table.hpp"

#include <bit>
#include <fstream>
#include <stdexcept>

namespace bfdeg {

namespace {

// Mask of the table bits actually used inside the (single) word.
constexpr std::uint64_t low_bits_mask(int n_vars) {
    return n_vars >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n_vars)) - 1;
}

void check_words(int n_vars, const std::vector<std::uint64_t>& words) {
    check_var_count(n_vars);
    if (words.size() != words_per_table(n_vars)) {
        throw std::invalid_argument("packed table has " + std::to_string(words.size()) +
                                    " words, expected " +
                                    std::to_string(words_per_table(n_vars)));
    }
    if (n_vars < 6 && (words[0] & ~low_bits_mask(n_vars)) != 0) {
        throw std::invalid_argument("bits above index 2^n must be zero for n < 6");
    }
}

}  // namespace

void check_var_count(int n_vars) {
    if (n_vars < kMinVars || n_vars > kMaxVars) {
        throw std::invalid_argument("variable count " + std::to_string(n_vars) +
                                    " out of range [1, 30]");
    }
}

TruthTable::TruthTable(int n_vars, std::vector<std::uint64_t> table_words)
    : n(n_vars), words(std::move(table_words)) {
    check_words(n, words);
}

TruthTable TruthTable::zeros(int n_vars) {
    check_var_count(n_vars);
    TruthTable tt;
    tt.n = n_vars;
    tt.words.assign(words_per_table(n_vars), 0);
    return tt;
}

AnfVector::AnfVector(int n_vars, std::vector<std::uint64_t> coeff_words)
    : n(n_vars), words(std::move(coeff_words)) {
    check_words(n, words);
}

ByteTable::ByteTable(int n_vars, std::vector<std::uint8_t> table_values)
    : n(n_vars), values(std::move(table_values)) {
    check_var_count(n);
    if (values.size() != table_size(n)) {
        throw std::invalid_argument("byte table has " + std::to_string(values.size()) +
                                    " entries, expected " + std::to_string(table_size(n)));
    }
    for (std::uint8_t v : values) {
        if (v > 1) throw std::invalid_argument("byte table entries must be 0 or 1");
    }
}

ByteTable ByteTable::zeros(int n_vars) {
    check_var_count(n_vars);
    ByteTable b;
    b.n = n_vars;
    b.values.assign(table_size(n_vars), 0);
    return b;
}

void pack_bits(std::span<const std::uint8_t> values, std::span<std::uint64_t> words) {
    for (auto& w : words) w = 0;
    for (std::uint64_t i = 0; i < values.size(); ++i) {
        words[i >> 6] |= static_cast<std::uint64_t>(values[i] & 1) << (i & 63);
    }
}

void unpack_bits(std::span<const std::uint64_t> words, std::span<std::uint8_t> values) {
    for (std::uint64_t i = 0; i < values.size(); ++i) {
        values[i] = static_cast<std::uint8_t>((words[i >> 6] >> (i & 63)) & 1);
    }
}

std::uint64_t weight_of_words(std::span<const std::uint64_t> words) {
    std::uint64_t total = 0;
    for (std::uint64_t w : words) total += static_cast<unsigned>(std::popcount(w));
    return total;
}

std::uint64_t weight_of_bytes(std::span<const std::uint8_t> values) {
    std::uint64_t total = 0;
    for (std::uint8_t v : values) total += v;
    return total;
}

int parity_of_words(std::span<const std::uint64_t> words) {
    std::uint64_t sum = words[0];
    for (std::size_t i = 1; i < words.size(); ++i) sum ^= words[i];
    for (int shift = 32; shift > 0; shift >>= 1) sum ^= sum >> shift;
    return static_cast<int>(sum & 1);
}

TruthTable pack(const ByteTable& bytes) {
    TruthTable tt = TruthTable::zeros(bytes.n);
    pack_bits(bytes.values, tt.words);
    return tt;
}

ByteTable unpack(const TruthTable& tt) {
    ByteTable b = ByteTable::zeros(tt.n);
    unpack_bits(tt.words, b.values);
    return b;
}

AnfVector pack_anf(const ByteTable& bytes) {
    AnfVector anf;
    anf.n = bytes.n;
    anf.words.assign(words_per_table(bytes.n), 0);
    pack_bits(bytes.values, anf.words);
    return anf;
}

ByteTable unpack_anf(const AnfVector& anf) {
    ByteTable b = ByteTable::zeros(anf.n);
    unpack_bits(anf.words, b.values);
    return b;
}

std::uint64_t weight_bytes(const ByteTable& bytes) { return weight_of_bytes(bytes.values); }

std::uint64_t weight_words(const TruthTable& tt) { return weight_of_words(tt.words); }

int parity_check(const TruthTable& tt) { return parity_of_words(tt.words); }

int parity_check_bytes(const ByteTable& bytes) {
    return static_cast<int>(weight_of_bytes(bytes.values) & 1);
}

TruthTable truth_table_from_text(std::string_view bits, int n_vars) {
    check_var_count(n_vars);
    if (bits.size() != table_size(n_vars)) {
        throw std::invalid_argument("bit string has length " + std::to_string(bits.size()) +
                                    ", expected " + std::to_string(table_size(n_vars)));
    }
    TruthTable tt = TruthTable::zeros(n_vars);
    for (std::uint64_t i = 0; i < bits.size(); ++i) {
        const char c = bits[i];
        if (c != '0' && c != '1') {
            throw std::invalid_argument(std::string("invalid character '") + c +
                                        "' in truth table string");
        }
        if (c == '1') tt.words[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    return tt;
}

namespace {

std::string packed_to_text(std::span<const std::uint64_t> words, int n_vars) {
    std::string out(table_size(n_vars), '0');
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if ((words[i >> 6] >> (i & 63)) & 1) out[i] = '1';
    }
    return out;
}

}  // namespace

std::string truth_table_to_text(const TruthTable& tt) { return packed_to_text(tt.words, tt.n); }

std::string anf_to_text(const AnfVector& anf) { return packed_to_text(anf.words, anf.n); }

TruthTable read_truth_table(const std::string& path, int n_vars) {
    check_var_count(n_vars);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<char> raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t expected = 8 * words_per_table(n_vars);
    if (raw.size() != expected) {
        throw std::invalid_argument("file '" + path + "' holds " + std::to_string(raw.size()) +
                                    " bytes, expected " + std::to_string(expected) +
                                    " for n=" + std::to_string(n_vars));
    }
    std::vector<std::uint64_t> words(words_per_table(n_vars), 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::uint64_t w = 0;
        for (int b = 0; b < 8; ++b) {
            w |= std::uint64_t{static_cast<std::uint8_t>(raw[8 * i + b])} << (8 * b);
        }
        words[i] = w;
    }
    return TruthTable(n_vars, std::move(words));
}

void write_packed_words(const std::string& path, std::span<const std::uint64_t> words) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    for (std::uint64_t w : words) {
        char bytes[8];
        for (int b = 0; b < 8; ++b) bytes[b] = static_cast<char>((w >> (8 * b)) & 0xFF);
        out.write(bytes, 8);
    }
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace bfdeg
