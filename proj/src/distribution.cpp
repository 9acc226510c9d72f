#include "bfdeg/distribution.hpp"

#include <stdexcept>
#include <string>

#include "bfdeg/anf.hpp"
#include "bfdeg/degree.hpp"
#include "bfdeg/wlo.hpp"

namespace bfdeg {

namespace {

void check_count_vars(int n_vars) {
    if (n_vars < 0 || n_vars > kMaxCountVars) {
        throw std::invalid_argument("degree counting is limited to 0 <= n <= " +
                                    std::to_string(kMaxCountVars));
    }
}

}  // namespace

BigInt count_formula(int n_vars, int k) {
    check_count_vars(n_vars);
    if (k < 0 || k > n_vars) {
        throw std::invalid_argument("degree class " + std::to_string(k) + " out of range [0, " +
                                    std::to_string(n_vars) + "]");
    }
    if (k == 0) return 1;
    std::uint64_t lower_layers = 0;
    for (int i = 0; i < k; ++i) lower_layers += binomial(n_vars, i);
    const BigInt choices = (BigInt(1) << binomial(n_vars, k)) - 1;
    return choices << lower_layers;
}

BigInt DegreeDistribution::total() const {
    BigInt sum = zero_function;
    for (const BigInt& c : by_degree) sum += c;
    return sum;
}

DegreeDistribution enumerate_distribution(int n_vars) {
    if (n_vars < 1 || n_vars > kMaxEnumVars) {
        throw std::invalid_argument("enumeration is limited to 1 <= n <= " +
                                    std::to_string(kMaxEnumVars));
    }
    DegreeDistribution dist;
    dist.n = n_vars;
    dist.zero_function = 0;
    dist.by_degree.assign(n_vars + 1, 0);

    const std::uint64_t size = table_size(n_vars);
    std::vector<std::uint8_t> table(size);
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << size); ++f) {
        for (std::uint64_t i = 0; i < size; ++i) table[i] = (f >> i) & 1;
        anft_bytewise_inplace(table);
        const Degree d = deg_es(table);
        if (d.is_neg_infinity()) {
            ++dist.zero_function;
        } else {
            ++dist.by_degree[d.value()];
        }
    }
    return dist;
}

BigRational high_degree_fraction(int n_vars) {
    if (n_vars < 1 || n_vars > kMaxCountVars) {
        throw std::invalid_argument("high_degree_fraction is limited to 1 <= n <= " +
                                    std::to_string(kMaxCountVars));
    }
    const BigInt top_two = count_formula(n_vars, n_vars) + count_formula(n_vars, n_vars - 1);
    const BigInt all = BigInt(1) << (std::uint64_t{1} << n_vars);
    return BigRational(top_two, all);
}

}  // namespace bfdeg
