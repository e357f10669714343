#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "iwss/bigint.hpp"

namespace iwss {

// Prime factorization as prime -> exponent. `complete` is false when a
// composite cofactor resisted factoring; the cofactor is then stored so the
// product invariant still holds.
struct Factorization {
    std::map<BigInt, int> factors;
    bool complete = true;
    BigInt cofactor = 1;  // composite remainder when !complete

    BigInt value() const;
};

// Deterministic Miller-Rabin for n < 3.3e24 (fixed witness set), probabilistic
// beyond with error < 2^-128.
bool is_prime(const BigInt& n);

// Trial division to 1e6, then Pollard rho (Brent) with an iteration cap per
// factor. Guaranteed complete when every prime factor is < 1e14.
Factorization factor(const BigInt& n);

// Largest e with l^e | n. Rejects n = 0.
int valuation(const BigInt& n, const BigInt& l);

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(BigInt a, BigInt n);

// Square root mod odd prime l (Tonelli-Shanks); nullopt for non-residues.
std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& l);

// Modular inverse; throws std::domain_error when gcd(a, m) != 1.
BigInt inv_mod(const BigInt& a, const BigInt& m);

BigInt gcd(BigInt a, BigInt b);

// Euclidean remainder in [0, m).
inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace iwss
