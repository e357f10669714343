#pragma once

#include <vector>

#include "iwss/bigint.hpp"

namespace iwss {

// s = number of primes above l in the cyclotomic Z_p-extension of Q:
// s = p^(k-1) with k = v_p(l^(p-1) - 1).
struct SplittingNumber {
    BigInt l;
    BigInt p;
    int k = 1;
    BigInt s = 1;
};

SplittingNumber splitting_number(const BigInt& l, const BigInt& p);

// Independent oracle: prime count in layer n is p^n divided by the p-part of
// the multiplicative order of l mod p^(n+1). The sequence stabilizes at s.
std::vector<BigInt> splitting_number_oracle(const BigInt& l, const BigInt& p, int layers);

}  // namespace iwss
