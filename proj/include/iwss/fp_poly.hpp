#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iwss/arith.hpp"
#include "iwss/bigint.hpp"

namespace iwss {

// Deterministic xorshift generator; callers own the state so runs reproduce.
struct SeededRng {
    std::uint64_t state;
    explicit SeededRng(std::uint64_t seed = 0x9E3779B97F4A7C15ULL) : state(seed | 1) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    BigInt below(const BigInt& n) {
        BigInt acc = 0;
        int bits = 0;
        while ((BigInt(1) << bits) <= n) bits += 64, acc = (acc << 64) + next();
        return mod_floor(acc, n);
    }
};

// Univariate polynomial over F_l, coefficients low-to-high, reduced and trimmed.
class FpPoly {
  public:
    FpPoly(BigInt l, std::vector<BigInt> coeffs);
    static FpPoly zero(const BigInt& l) { return FpPoly(l, {}); }
    static FpPoly x(const BigInt& l) { return FpPoly(l, {0, 1}); }
    static FpPoly constant(const BigInt& l, const BigInt& c) { return FpPoly(l, {c}); }

    const BigInt& modulus() const { return l_; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }
    BigInt operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : BigInt(0); }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly scaled(const BigInt& k) const;
    std::pair<FpPoly, FpPoly> divmod(const FpPoly& d) const;
    FpPoly monic() const;
    FpPoly derivative() const;
    BigInt eval(const BigInt& x) const;

    friend FpPoly gcd(FpPoly a, FpPoly b);
    bool operator==(const FpPoly& o) const { return l_ == o.l_ && c_ == o.c_; }

  private:
    BigInt l_;
    std::vector<BigInt> c_;
    void trim();
};

// x^e mod f via square-and-multiply (e may be huge).
FpPoly x_pow_mod(const BigInt& e, const FpPoly& f);
FpPoly pow_mod(const FpPoly& base, const BigInt& e, const FpPoly& f);

// All roots of f in F_l with multiplicities (repeated deflation); uses
// gcd(f, x^l - x) and equal-degree splitting with a caller-seeded generator.
std::vector<std::pair<BigInt, int>> roots_mod_prime(const FpPoly& f, SeededRng& rng);

// Monic irreducible of degree d over F_l (deterministic given the seed).
FpPoly random_irreducible(const BigInt& l, int d, SeededRng& rng);

bool is_irreducible(const FpPoly& f);

// ---- degree-d extension F_{l^d} = F_l[z]/(h) ----

class ExtField;

// Element as coefficient vector of length d (low-to-high in the generator).
using ExtElt = std::vector<BigInt>;

class ExtField {
  public:
    ExtField(BigInt l, FpPoly modulus);

    const BigInt& l() const { return l_; }
    int degree() const { return d_; }
    const FpPoly& modulus_poly() const { return h_; }

    ExtElt zero() const { return ExtElt(d_, BigInt(0)); }
    ExtElt one() const;
    ExtElt from_base(const BigInt& c) const;
    ExtElt generator() const;

    ExtElt add(const ExtElt& a, const ExtElt& b) const;
    ExtElt sub(const ExtElt& a, const ExtElt& b) const;
    ExtElt mul(const ExtElt& a, const ExtElt& b) const;
    ExtElt scaled(const ExtElt& a, const BigInt& k) const;
    ExtElt pow(const ExtElt& a, const BigInt& e) const;
    ExtElt inv(const ExtElt& a) const;
    bool is_zero(const ExtElt& a) const;
    bool eq(const ExtElt& a, const ExtElt& b) const { return a == b; }
    BigInt order() const;  // l^d
    ExtElt random(SeededRng& rng) const;

  private:
    BigInt l_;
    int d_;
    FpPoly h_;
};

// All roots of f (an F_l polynomial) in F_{l^d}, with multiplicities.
std::vector<std::pair<ExtElt, int>> roots_in_extension(const FpPoly& f, const ExtField& K,
                                                       SeededRng& rng);

}  // namespace iwss
