#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "iwss/arith.hpp"

using namespace iwss;

TEST_CASE("is_prime basics") {
    CHECK(is_prime(17));
    CHECK(is_prime(BigInt("2840183")));
    CHECK_FALSE(is_prime(BigInt("90885856")));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(BigInt("6564248011")));
    CHECK(is_prime(BigInt("4333088089081")));
    CHECK(is_prime(BigInt("92081500261")));
}

TEST_CASE("is_prime agrees with trial division (exhaustive below 1e5)") {
    // sieve
    const int N = 100000;
    std::vector<bool> comp(N + 1, false);
    for (int i = 2; i * i <= N; ++i)
        if (!comp[i])
            for (int j = i * i; j <= N; j += i) comp[j] = true;
    for (int n = 2; n <= N; ++n) CHECK(is_prime(n) == !comp[n]);
}

TEST_CASE("factor examples") {
    auto f = factor(BigInt("90885856"));
    CHECK(f.complete);
    CHECK(f.factors.at(2) == 5);
    CHECK(f.factors.at(BigInt("2840183")) == 1);
    CHECK(f.factors.size() == 2);

    auto g = factor(BigInt("445766016078830163888"));
    CHECK(g.complete);
    CHECK(g.factors.at(2) == 4);
    CHECK(g.factors.at(3) == 5);
    CHECK(g.factors.at(29) == 1);
    CHECK(g.factors.at(602279) == 1);
    CHECK(g.factors.at(BigInt("6564248011")) == 1);

    auto one = factor(1);
    CHECK(one.complete);
    CHECK(one.factors.empty());
    CHECK(one.value() == 1);
}

TEST_CASE("factor recombination property") {
    SeededRng rngState(42);
    auto rng = [&rngState]() { return rngState.next(); };
    for (int i = 0; i < 40; ++i) {
        BigInt n = BigInt(rng() % 1000000000000ULL) + 2;
        auto f = factor(n);
        REQUIRE(f.complete);
        CHECK(f.value() == n);
        for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(128880, 3) == 2);  // 359^2 - 1
    CHECK(valuation(64, 2) == 6);
    CHECK(valuation(7, 5) == 0);
    CHECK(valuation(-24, 2) == 3);
    CHECK_THROWS_AS(valuation(0, 3), std::domain_error);
}

TEST_CASE("mod_pow against direct multiplication") {
    BigInt m = 2187;  // 3^7
    BigInt direct = 1;
    for (int i = 0; i < 6; ++i) direct = direct * 587 % m;
    CHECK(mod_pow(587, 6, m) == direct);
    CHECK(mod_pow(2, 10, 1) == 0);
    CHECK(mod_pow(-1, 3, 7) == 6);
}

TEST_CASE("jacobi and sqrt_mod") {
    CHECK(jacobi(2, 7) == 1);  // 3^2 = 2 mod 7
    CHECK(jacobi(2, 5) == -1);
    CHECK(jacobi(0, 7) == 0);
    CHECK_FALSE(sqrt_mod(2, 5).has_value());
    auto r = sqrt_mod(2, 7);
    REQUIRE(r.has_value());
    CHECK(mod_floor(*r * *r, 7) == 2);

    // round-trip property over a few odd primes
    for (BigInt l : {BigInt(3), BigInt(13), BigInt(101), BigInt(10007)}) {
        SeededRng rng(7 + static_cast<unsigned long long>(l.convert_to<long>()));
        for (int i = 0; i < 25; ++i) {
            BigInt a = rng.below(l);
            auto s = sqrt_mod(a, l);
            if (jacobi(a, l) == 1) {
                REQUIRE(s.has_value());
                CHECK(mod_floor(*s * *s, l) == mod_floor(a, l));
            } else if (jacobi(a, l) == -1) {
                CHECK_FALSE(s.has_value());
            }
        }
    }
}

TEST_CASE("inv_mod") {
    CHECK(mod_floor(inv_mod(3, 7) * 3, 7) == 1);
    CHECK_THROWS_AS(inv_mod(2, 4), std::domain_error);
}
