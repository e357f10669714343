#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "iwss/padic.hpp"

using namespace iwss;

namespace {

std::set<long> residues(const std::vector<std::pair<PadicInt, bool>>& rs) {
    std::set<long> out;
    for (auto& [r, c] : rs) out.insert(r.residue.convert_to<long>());
    return out;
}

BigInt pow_int(BigInt b, int e) {
    BigInt r = 1;
    while (e--) r *= b;
    return r;
}

// brute-force roots of f modulo l^k
std::set<long> brute_roots(const std::vector<BigInt>& f, long l, int k) {
    BigInt M = pow_int(l, k);
    std::set<long> out;
    for (BigInt x = 0; x < M; ++x) {
        BigInt acc = 0;
        for (auto it = f.rbegin(); it != f.rend(); ++it) acc = mod_floor(acc * x + *it, M);
        if (acc == 0) out.insert(x.convert_to<long>());
    }
    return out;
}

}  // namespace

TEST_CASE("lift_roots spec examples") {
    // x^2 - 2, l=7, k=2: {10, 39}
    auto rs = lift_roots({-2, 0, 1}, 7, 2);
    CHECK(residues(rs) == std::set<long>{10, 39});
    for (auto& [r, cert] : rs) CHECK(cert);
    // x^2 + 1, l=3: no roots
    CHECK(lift_roots({1, 0, 1}, 3, 3).empty());
    // (x-1)(x-6) = x^2 - 7x + 6, l=5, k=2: both roots = 1 mod 5 (multiple-root recursion)
    CHECK(residues(lift_roots({6, -7, 1}, 5, 2)) == std::set<long>{1, 6});
}

TEST_CASE("certified roots satisfy the evaluation bound") {
    auto rs = lift_roots({-2, 0, 1}, 7, 8);
    BigInt M = pow_int(7, 8);
    for (auto& [r, cert] : rs) {
        CHECK(cert);
        CHECK(mod_floor(r.residue * r.residue - 2, M) == 0);
    }
}

TEST_CASE("root sets match exhaustive search mod l^3 (oracle)") {
    SeededRng rng(31);
    for (long l : {2L, 3L, 5L, 7L, 11L, 13L}) {
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<BigInt> f;
            int deg = 2 + static_cast<int>(rng.next() % 3);  // cubic/quartic range
            for (int i = 0; i <= deg; ++i)
                f.push_back(BigInt(static_cast<long>(rng.next() % 19)) - 9);
            if (f.back() == 0) f.back() = 1;
            // squarefree over Q guard: sample until the reduction isn't identically 0
            bool allzero = true;
            for (auto& c : f)
                if (c != 0) allzero = false;
            if (allzero) continue;
            // discriminant-zero (non-squarefree over Q) inputs violate the
            // contract; skip by perturbing the constant until gcd(f,f')=1
            // cheap proxy: brute roots counted with the lifted set anyway;
            // a repeated rational root would loop forever only if not
            // squarefree, so nudge:
            f[0] += 1;
            std::set<long> expect = brute_roots(f, l, 3);
            std::set<long> got;
            try {
                got = residues(lift_roots(f, l, 3));
            } catch (const precision_exhausted&) {
                continue;  // non-squarefree sample; contract excludes it
            }
            CHECK(got == expect);
        }
    }
}

TEST_CASE("is_square_ql") {
    CHECK(is_square_ql(7, 0, 2, 8));        // 3^2 = 2 mod 7
    CHECK_FALSE(is_square_ql(2, 3, 1, 8));  // 8 = 2^3: odd valuation
    CHECK(is_square_ql(2, 0, 17, 8));       // 17 = 1 mod 8
    CHECK_FALSE(is_square_ql(2, 0, 3, 8));
    CHECK_FALSE(is_square_ql(5, 0, 2, 8));
    CHECK_THROWS_AS(is_square_ql(2, 0, 3, 2), insufficient_precision);
}

TEST_CASE("is_square agrees with exhaustive squares mod l^5") {
    for (long l : {2L, 3L, 5L, 7L}) {
        BigInt M = pow_int(l, 5);
        std::set<long> squares;
        for (BigInt x = 0; x < M; ++x) squares.insert(mod_floor(x * x, M).convert_to<long>());
        for (BigInt n = 1; n < M; ++n) {
            int v = valuation(n, l);
            if (v >= 3) continue;  // unit part not determined well enough mod l^5
            BigInt u = n / pow_int(l, v);
            bool expect = squares.count(n.convert_to<long>()) > 0;
            // a p-adic square with small valuation stays square mod l^5 given
            // enough unit precision; conversely non-squares mod l^5 with
            // v <= 2 cannot be squares in Z_l
            bool got = is_square_ql(l, v, u, 5 - v);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("solve_quadratic_in_y spec examples") {
    auto mk = [](long l, int prec, long r) {
        return PadicInt{BigInt(l), prec, mod_floor(BigInt(r), pow_int(l, prec))};
    };
    // y^2 = 1 over Q_5: {1, -1}
    auto r1 = solve_quadratic_in_y(mk(5, 6, 0), mk(5, 6, 1));
    std::set<long> s1;
    for (auto& y : r1) s1.insert(y.residue.convert_to<long>());
    CHECK(s1 == std::set<long>{1, (pow_int(5, 6) - 1).convert_to<long>()});
    // y^2 = 2 over Q_5: none
    CHECK(solve_quadratic_in_y(mk(5, 6, 0), mk(5, 6, 2)).empty());
    // y^2 + y = 0 over Q_7: {0, -1}
    auto r3 = solve_quadratic_in_y(mk(7, 6, 1), mk(7, 6, 0));
    std::set<long> s3;
    for (auto& y : r3) s3.insert(y.residue.convert_to<long>());
    CHECK(s3 == std::set<long>{0, (pow_int(7, 6) - 1).convert_to<long>()});
}

TEST_CASE("base roots embed into extension roots") {
    // roots of f in Z_l embed into the degree-p unramified extension root set
    std::vector<BigInt> f{-2, 0, 1};  // x^2 - 2
    for (auto [l, d] : std::vector<std::pair<long, int>>{{7, 3}, {23, 3}}) {
        auto base = lift_roots(f, l, 4);
        auto ext = lift_roots_ext(f, l, d, 4);
        CHECK(ext.size() >= base.size());
        for (auto& [r, c] : base) {
            bool found = false;
            for (auto& [R, C] : ext) {
                bool matches = R.coeffs[0] == r.residue;
                for (int i = 1; i < d && matches; ++i) matches = R.coeffs[i] == 0;
                if (matches) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("extension roots: squares in the residue extension appear") {
    // 2 is a non-residue mod 5, but becomes a square in F_25, hence x^2-2 has
    // roots in the unramified quadratic extension... our d is restricted to
    // {1, p}; use d=3 where x^2-2 still has no roots (non-square in odd-degree
    // extension iff non-square below)
    CHECK(lift_roots_ext({-2, 0, 1}, 5, 3, 4).empty());
    // x^3 - 2 over Q_7 in the cubic extension: 3 roots (2 is a non-cube mod 7)
    CHECK(lift_roots({-2, 0, 0, 1}, 7, 4).empty());
    CHECK(lift_roots_ext({-2, 0, 0, 1}, 7, 3, 4).size() == 3);
}

TEST_CASE("multiple-root recursion in the extension") {
    // (x-1)(x-6) over the cubic extension of Q_5: still exactly the two roots
    auto rs = lift_roots_ext({6, -7, 1}, 5, 3, 3);
    CHECK(rs.size() == 2);
}
