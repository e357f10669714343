#include "iwss/cyclotomic.hpp"

#include <stdexcept>

#include "iwss/arith.hpp"

namespace iwss {

SplittingNumber splitting_number(const BigInt& l, const BigInt& p) {
    if (l == p) throw std::domain_error("splitting_number: l = p is excluded");
    // k = v_p(l^(p-1) - 1), computed mod p^K with K growing so l^(p-1) is
    // never materialized as an integer.
    int K = 4;
    while (true) {
        BigInt pK = 1;
        for (int i = 0; i < K; ++i) pK *= p;
        BigInt r = mod_pow(l, p - 1, pK);
        if (r != 1) {
            int k = valuation(r - 1, p);
            SplittingNumber out;
            out.l = l;
            out.p = p;
            out.k = k;
            out.s = 1;
            for (int i = 1; i < k; ++i) out.s *= p;
            return out;
        }
        K *= 2;
        if (K > 4096) throw std::runtime_error("splitting_number: k unreasonably large");
    }
}

std::vector<BigInt> splitting_number_oracle(const BigInt& l, const BigInt& p, int layers) {
    if (layers > 12) throw std::domain_error("splitting_number_oracle: layers > 12");
    std::vector<BigInt> out;
    for (int n = 0; n <= layers; ++n) {
        // multiplicative order of l modulo p^(n+1), then its p-part
        BigInt pn1 = 1;
        for (int i = 0; i <= n; ++i) pn1 *= p;
        BigInt group = pn1 / p * (p - 1);  // phi(p^(n+1))
        // order divides group = p^n (p-1): strip factors while l^e = 1
        BigInt e = group;
        for (const auto& [q, mult] : factor(group).factors) {
            for (int i = 0; i < mult; ++i) {
                if (mod_pow(l, e / q, pn1) == 1)
                    e /= q;
                else
                    break;
            }
        }
        // p-part of the order
        BigInt ppart = 1;
        BigInt t = e;
        while (t % p == 0) {
            ppart *= p;
            t /= p;
        }
        BigInt pn = pn1 / p;  // p^n
        out.push_back(pn / ppart);
    }
    return out;
}

}  // namespace iwss
