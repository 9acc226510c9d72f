#include "bfdeg/oracle.hpp"

#include <bit>
#include <stdexcept>

namespace bfdeg {

ByteTable anf_oracle(const ByteTable& tt) {
    ByteTable anf = ByteTable::zeros(tt.n);
    for (std::uint64_t g = 0; g < table_size(tt.n); ++g) {
        std::uint8_t acc = 0;
        std::uint64_t b = g;
        while (true) {
            acc ^= tt.values[b];
            if (b == 0) break;
            b = (b - 1) & g;  // next subset of g, descending
        }
        anf.values[g] = acc;
    }
    return anf;
}

Degree deg_oracle(const ByteTable& tt) {
    if (tt.n > 10) {
        throw std::invalid_argument("deg_oracle is limited to n <= 10 (exponential cost)");
    }
    const ByteTable anf = anf_oracle(tt);
    int best = -1;
    for (std::uint64_t g = 0; g < table_size(tt.n); ++g) {
        if (anf.values[g]) {
            const int w = std::popcount(g);
            if (w > best) best = w;
        }
    }
    return Degree::from_sentinel(best);
}

}  // namespace bfdeg
