#pragma once

#include "torsionlab/bigint.hpp"
#include "torsionlab/valuation.hpp"

namespace torsionlab {

// v2(m) for a positive integer m.
Valuation v2(const Int& m);
Valuation v2(long long m);

// S2(m): number of 1-bits of m >= 0.
int digit_sum_2(const Int& m);
int digit_sum_2(long long m);

// v2(C(m,k)) without computing C(m,k): the number of carries when adding
// k and m-k in base 2, i.e. S2(k) + S2(m-k) - S2(m).
Valuation v2_binomial(long long m, long long k);

// Exact C(m,k).
Int binomial(long long m, long long k);

}  // namespace torsionlab
