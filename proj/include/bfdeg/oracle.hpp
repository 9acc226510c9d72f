#pragma once

#include "bfdeg/degree.hpp"
#include "bfdeg/truth_table.hpp"

namespace bfdeg {

// Reference implementations straight from the definitions. They share
// no code with the transform or the degree searches and exist only to
// cross-check them (tests, the verify command). Exponential cost.

// Each ANF coefficient computed as the XOR of f over all subsets of
// its monomial mask; no butterfly sharing.
ByteTable anf_oracle(const ByteTable& tt);

// anf_oracle followed by a maximal-weight scan. Rejects n > 10.
Degree deg_oracle(const ByteTable& tt);

}  // namespace bfdeg
