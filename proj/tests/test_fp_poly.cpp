#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "iwss/fp_poly.hpp"

using namespace iwss;

namespace {

std::set<long> root_set(const std::vector<std::pair<BigInt, int>>& rs) {
    std::set<long> out;
    for (auto& [r, m] : rs) out.insert(r.convert_to<long>());
    return out;
}

}  // namespace

TEST_CASE("roots_mod_prime examples") {
    SeededRng rng(1);
    CHECK(root_set(roots_mod_prime(FpPoly(7, {-1, 0, 1}), rng)) == std::set<long>{1, 6});
    CHECK(root_set(roots_mod_prime(FpPoly(3, {1, 0, 1}), rng)).empty());
    // psi_3 of y^2 = x^3 - x over F_5: no roots (exhaustive [0..4] checked below)
    FpPoly psi3(5, {-1, 0, -6, 0, 3});
    CHECK(root_set(roots_mod_prime(psi3, rng)).empty());
    for (BigInt x = 0; x < 5; ++x) CHECK(psi3.eval(x) != 0);
}

TEST_CASE("roots agree with exhaustive evaluation for small l") {
    for (long l : {2L, 3L, 5L, 7L, 11L, 23L, 47L}) {
        SeededRng rng(100 + l);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<BigInt> cs;
            int deg = 1 + static_cast<int>(rng.next() % 6);
            for (int i = 0; i <= deg; ++i) cs.push_back(rng.below(l));
            FpPoly f(l, cs);
            if (f.is_zero()) continue;
            std::set<long> expected;
            for (long x = 0; x < l; ++x)
                if (f.eval(x) == 0) expected.insert(x);
            auto rs = roots_mod_prime(f, rng);
            CHECK(root_set(rs) == expected);
            // multiplicity bound
            int total = 0;
            for (auto& [r, m] : rs) {
                CHECK(m >= 1);
                total += m;
            }
            CHECK(total <= f.degree());
        }
    }
}

TEST_CASE("multiplicities by repeated deflation") {
    // (x-2)^3 (x-5) over F_11
    FpPoly f = FpPoly(11, {-2, 1}) * FpPoly(11, {-2, 1}) * FpPoly(11, {-2, 1}) *
               FpPoly(11, {-5, 1});
    SeededRng rng(4);
    auto rs = roots_mod_prime(f, rng);
    std::map<long, int> got;
    for (auto& [r, m] : rs) got[r.convert_to<long>()] = m;
    CHECK(got == std::map<long, int>{{2, 3}, {5, 1}});
}

TEST_CASE("random_irreducible and is_irreducible") {
    SeededRng rng(9);
    for (auto [l, d] : std::vector<std::pair<long, int>>{{2, 3}, {7, 3}, {5, 5}, {13, 1}}) {
        FpPoly h = random_irreducible(l, d, rng);
        CHECK(h.degree() == d);
        CHECK(is_irreducible(h));
        if (d > 1) {
            // no roots in the base field
            for (long x = 0; x < l; ++x) CHECK(h.eval(x) != 0);
        }
    }
    // x^3 + x + 1 is irreducible over F_2; x^2 + 1 over F_3; x^2 - 1 is not
    CHECK(is_irreducible(FpPoly(2, {1, 1, 0, 1})));
    CHECK(is_irreducible(FpPoly(3, {1, 0, 1})));
    CHECK_FALSE(is_irreducible(FpPoly(7, {-1, 0, 1})));
}

TEST_CASE("extension field arithmetic") {
    SeededRng rng(11);
    FpPoly h = random_irreducible(3, 3, rng);
    ExtField K(3, h);
    CHECK(K.order() == 27);
    ExtElt g = K.generator();
    // Fermat: g^(27) = g
    CHECK(K.eq(K.pow(g, 27), g));
    // inverses
    for (int i = 0; i < 10; ++i) {
        ExtElt a = K.random(rng);
        if (K.is_zero(a)) continue;
        CHECK(K.eq(K.mul(a, K.inv(a)), K.one()));
    }
}

TEST_CASE("roots_in_extension examples") {
    SeededRng rng(13);
    // the defining polynomial has exactly d roots (the generator's conjugates)
    FpPoly h = random_irreducible(5, 3, rng);
    ExtField K(5, h);
    auto rs = roots_in_extension(h, K, rng);
    CHECK(rs.size() == 3);
    // x^2 - 1 over F_27 -> {1, -1}
    FpPoly h3 = random_irreducible(3, 3, rng);
    ExtField K3(3, h3);
    auto rs2 = roots_in_extension(FpPoly(3, {-1, 0, 1}), K3, rng);
    CHECK(rs2.size() == 2);
    for (auto& [r, m] : rs2) {
        CHECK(K3.eq(K3.mul(r, r), K3.one()));
    }
    // x^3 - 2 over F_343: 2 is a non-cube in F_7, three roots in the cubic extension
    FpPoly h7 = random_irreducible(7, 3, rng);
    ExtField K7(7, h7);
    auto rs3 = roots_in_extension(FpPoly(7, {-2, 0, 0, 1}), K7, rng);
    CHECK(rs3.size() == 3);
    for (auto& [r, m] : rs3) CHECK(K7.eq(K7.pow(r, 3), K7.from_base(2)));
    // no roots in the base field itself
    CHECK(roots_mod_prime(FpPoly(7, {-2, 0, 0, 1}), rng).empty());
}

TEST_CASE("roots_in_extension at degree 1 matches roots_mod_prime") {
    SeededRng rng(17);
    for (long l : {3L, 7L, 11L}) {
        FpPoly h = random_irreducible(l, 1, rng);
        ExtField K(l, h);
        for (int trial = 0; trial < 8; ++trial) {
            std::vector<BigInt> cs;
            for (int i = 0; i <= 4; ++i) cs.push_back(rng.below(l));
            FpPoly f(l, cs);
            if (f.is_zero() || f.degree() < 1) continue;
            auto base = roots_mod_prime(f, rng);
            auto ext = roots_in_extension(f, K, rng);
            CHECK(base.size() == ext.size());
        }
    }
}

TEST_CASE("returned roots evaluate to zero (property)") {
    SeededRng rng(23);
    FpPoly h = random_irreducible(11, 2, rng);
    ExtField K(11, h);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<BigInt> cs;
        for (int i = 0; i <= 3 + static_cast<int>(rng.next() % 3); ++i) cs.push_back(rng.below(11));
        FpPoly f(11, cs);
        if (f.is_zero() || f.degree() < 1) continue;
        for (auto& [r, m] : roots_in_extension(f, K, rng)) {
            // evaluate f at r in K
            ExtElt acc = K.zero();
            for (int i = f.degree(); i >= 0; --i) acc = K.add(K.mul(acc, r), K.from_base(f[i]));
            CHECK(K.is_zero(acc));
        }
    }
}
