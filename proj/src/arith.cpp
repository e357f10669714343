#include "iwss/arith.hpp"

#include <stdexcept>

namespace iwss {

BigInt Factorization::value() const {
    BigInt v = complete ? BigInt(1) : cofactor;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

BigInt gcd(BigInt a, BigInt b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

BigInt mod_pow(const BigInt& base, const BigInt& exp, const BigInt& modulus) {
    if (modulus <= 0) throw std::domain_error("mod_pow: modulus must be >= 1");
    if (modulus == 1) return 0;
    if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
    return boost::multiprecision::powm(mod_floor(base, modulus), exp, modulus);
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt r0 = m, r1 = mod_floor(a, m), t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
    return mod_floor(t0, m);
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, int r) {
    BigInt x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

// Deterministic bound 3.317e24 for the first 13 prime-base witnesses.
const BigInt kDeterministicBound("3317044064679887385961981");

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                       23, 29, 31, 37, 41, 43, 47};
    for (int p : small_primes) {
        if (n % p == 0) return n == p;
    }
    BigInt d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    static const int witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (int a : witnesses) {
        if (miller_rabin_witness(n, a, d, r)) return false;
    }
    if (n < kDeterministicBound) return true;
    // extra pseudo-random witnesses to push the error below 2^-128
    BigInt a = 1234567891;
    for (int i = 0; i < 64; ++i) {
        a = a * a + 12345;
        BigInt w = 2 + mod_floor(a, n - 3);
        if (miller_rabin_witness(n, w, d, r)) return false;
    }
    return true;
}

namespace {

constexpr std::int64_t kTrialBound = 1'000'000;
constexpr std::int64_t kRhoIterationCap = 100'000'000;

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor or 0 when
// the iteration cap is exhausted.
BigInt pollard_brent(const BigInt& n, std::uint64_t seed) {
    if (n % 2 == 0) return 2;
    std::uint64_t state = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    auto next_rand = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    std::int64_t spent = 0;
    while (spent < kRhoIterationCap) {
        BigInt y = mod_floor(BigInt(next_rand()), n - 1) + 1;
        BigInt c = mod_floor(BigInt(next_rand()), n - 1) + 1;
        BigInt g = 1, r = 1, q = 1, x = 0, ys = 0;
        const std::int64_t m = 128;
        while (g == 1 && spent < kRhoIterationCap) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                std::int64_t chunk = static_cast<std::int64_t>(
                    std::min(BigInt(m), r - k).convert_to<std::int64_t>());
                for (std::int64_t i = 0; i < chunk; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
                spent += chunk;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                ++spent;
            }
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

// n = m^k for some k >= 2? Returns base when so.
std::optional<BigInt> perfect_power(const BigInt& n) {
    for (int k = 2; BigInt(1) << k <= n; ++k) {
        BigInt lo = 2, hi = isqrt(n) + 1;
        // binary search for k-th root
        while (lo <= hi) {
            BigInt mid = (lo + hi) / 2;
            BigInt p = 1;
            bool over = false;
            for (int i = 0; i < k && !over; ++i) {
                p *= mid;
                if (p > n) over = true;
            }
            if (!over && p == n) return mid;
            if (over || p > n)
                hi = mid - 1;
            else
                lo = mid + 1;
        }
    }
    return std::nullopt;
}

}  // namespace

Factorization factor(const BigInt& n) {
    if (n < 1) throw std::domain_error("factor: n must be >= 1");
    Factorization out;
    BigInt m = n;
    for (std::int64_t p = 2; p <= kTrialBound && p * p <= m; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) {
            ++out.factors[p];
            m /= p;
        }
    }
    if (m == 1) return out;
    std::vector<BigInt> stack{m};
    std::uint64_t seed = 0x5DEECE66DULL;
    while (!stack.empty()) {
        BigInt cur = stack.back();
        stack.pop_back();
        if (cur == 1) continue;
        if (cur <= kTrialBound * kTrialBound || is_prime(cur)) {
            if (is_prime(cur)) {
                ++out.factors[cur];
                continue;
            }
        }
        if (auto base = perfect_power(cur)) {
            int k = 0;
            BigInt t = cur;
            while (t % *base == 0 && t != 1) {
                t /= *base;
            }
            // cur = base^k exactly
            BigInt p = 1;
            k = 0;
            while (p != cur) {
                p *= *base;
                ++k;
            }
            for (int i = 0; i < k; ++i) stack.push_back(*base);
            continue;
        }
        BigInt d = pollard_brent(cur, ++seed);
        if (d == 0 || d == 1 || d == cur) {
            out.complete = false;
            out.cofactor *= cur;
            continue;
        }
        stack.push_back(d);
        stack.push_back(cur / d);
    }
    return out;
}

int valuation(const BigInt& n, const BigInt& l) {
    if (n == 0) throw std::domain_error("valuation: n must be nonzero");
    BigInt m = abs(n);
    int v = 0;
    while (m % l == 0) {
        m /= l;
        ++v;
    }
    return v;
}

int jacobi(BigInt a, BigInt n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd positive");
    a = mod_floor(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            BigInt r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a = a % n;
    }
    return n == 1 ? result : 0;
}

std::optional<BigInt> sqrt_mod(const BigInt& a0, const BigInt& l) {
    BigInt a = mod_floor(a0, l);
    if (a == 0) return BigInt(0);
    if (l == 2) return a;  // a in {0,1}
    if (jacobi(a, l) != 1) return std::nullopt;
    if (l % 4 == 3) return mod_pow(a, (l + 1) / 4, l);
    // Tonelli-Shanks
    BigInt s = l - 1;
    int e = 0;
    while (s % 2 == 0) {
        s /= 2;
        ++e;
    }
    BigInt n = 2;
    while (jacobi(n, l) != -1) ++n;
    BigInt x = mod_pow(a, (s + 1) / 2, l);
    BigInt b = mod_pow(a, s, l);
    BigInt g = mod_pow(n, s, l);
    int r = e;
    while (true) {
        BigInt t = b;
        int m = 0;
        while (t != 1) {
            t = t * t % l;
            ++m;
        }
        if (m == 0) return x;
        BigInt gs = mod_pow(g, BigInt(1) << (r - m - 1), l);
        g = gs * gs % l;
        x = x * gs % l;
        b = b * g % l;
        r = m;
    }
}

}  // namespace iwss
