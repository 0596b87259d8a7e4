#include <doctest.h>

#include <random>

#include "apsq/expbound.hpp"

using namespace apsq;

namespace {

// Direct factor-by-factor oracle for primitive divisors: trial-divide the
// n-th term completely and test every prime against the blocked product.
bool primitive_divisor_oracle(const LehmerParams& params, unsigned n) {
    BigInt un = lehmer_term(params, n);
    BigInt blocked = params.E * (params.E - 4 * params.Q);
    for (unsigned k = 1; k < n; ++k) blocked *= lehmer_term(params, k);
    mpz_abs(un.get_mpz_t(), un.get_mpz_t());
    mpz_abs(blocked.get_mpz_t(), blocked.get_mpz_t());
    for (BigInt p = 2; p * p <= un; p = (p == 2 ? BigInt(3) : p + 2)) {
        if (un % p != 0) continue;
        while (un % p == 0) un /= p;
        if (blocked % p != 0) return true;
    }
    if (un > 1 && blocked % un != 0) return true;
    return false;
}

}  // namespace

TEST_SUITE_BEGIN("expbound");

TEST_CASE("candidate exponent sets for d=2") {
    CHECK(exponent_set_d2(1).primes == std::vector<long long>{3, 5});
    CHECK(exponent_set_d2(3).primes == std::vector<long long>{3, 5});
    CHECK(exponent_set_d2(11).primes == std::vector<long long>{3, 5});
    // q = 29: 29 - (-1/29) = 28 = 2^2 * 7 contributes 7
    ExponentSet es = exponent_set_d2(29);
    CHECK(es.primes == std::vector<long long>{3, 5, 7});
    CHECK(es.provenance.at(3).base);
    CHECK(!es.provenance.at(7).base);
    CHECK(es.provenance.at(7).from_q == std::vector<long long>{29});
    CHECK_THROWS_AS(exponent_set_d2(0), std::invalid_argument);
}

TEST_CASE("candidate exponent sets for d=6") {
    std::vector<long long> base{3, 5, 7, 11, 13};
    CHECK(exponent_set_d6(1).primes == base);
    CHECK(exponent_set_d6(55).primes == base);   // q=5,7 are excluded; q=11 adds 5
    CHECK(exponent_set_d6(13).primes == base);   // q=13 adds 3, already present
    CHECK(exponent_set_d6(13).provenance.at(3).from_q == std::vector<long long>{13});
    // q = 37: (-105/37) = -1, so 38 = 2*19 contributes 19
    ExponentSet es = exponent_set_d6(37);
    CHECK(es.primes == std::vector<long long>{3, 5, 7, 11, 13, 19});
    CHECK(es.provenance.at(19).from_q == std::vector<long long>{37});
    CHECK_THROWS_AS(exponent_set_d6(3), std::invalid_argument);
    CHECK_THROWS_AS(exponent_set_d6(14), std::invalid_argument);
}

TEST_CASE("exponent sets grow monotonically with extra factors of r") {
    std::mt19937_64 rng(99);
    const long long extra2[] = {3, 7, 11, 29, 73};
    for (int i = 0; i < 40; ++i) {
        long long r = static_cast<long long>(rng() % 5000 + 1);
        auto before = exponent_set_d2(r).primes;
        long long p = extra2[rng() % 5];
        auto after = exponent_set_d2(r * p).primes;
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
    const long long extra6[] = {11, 13, 29, 37};
    for (int i = 0; i < 40; ++i) {
        long long r = static_cast<long long>(rng() % 3000 + 1);
        if (r % 2 == 0 || r % 3 == 0) continue;
        auto before = exponent_set_d6(r).primes;
        long long p = extra6[rng() % 4];
        auto after = exponent_set_d6(r * p).primes;
        CHECK(std::includes(after.begin(), after.end(), before.begin(), before.end()));
    }
}

TEST_CASE("Lehmer parameter validation") {
    CHECK_NOTHROW(LehmerParams(BigInt(1), BigInt(-1)));
    CHECK_THROWS_AS(LehmerParams(BigInt(0), BigInt(1)), std::invalid_argument);
    CHECK_THROWS_AS(LehmerParams(BigInt(1), BigInt(0)), std::invalid_argument);
    CHECK_THROWS_AS(LehmerParams(BigInt(2), BigInt(4)), std::invalid_argument);  // not coprime
    for (long k = 1; k <= 4; ++k)
        CHECK_THROWS_AS(LehmerParams(BigInt(k), BigInt(1)), std::invalid_argument);
    CHECK_THROWS_AS(LehmerParams(BigInt(-3), BigInt(-1)), std::invalid_argument);
}

TEST_CASE("Lehmer terms: identities and Fibonacci specialization") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 50; ++i) {
        BigInt E = BigInt(static_cast<long>(rng() % 81)) - 40;
        BigInt Q = BigInt(static_cast<long>(rng() % 81)) - 40;
        LehmerParams p = [&]() -> LehmerParams {
            try {
                return LehmerParams(E, Q);
            } catch (const std::invalid_argument&) {
                return LehmerParams(BigInt(7), BigInt(2));
            }
        }();
        CHECK(lehmer_term(p, 1) == 1);
        CHECK(lehmer_term(p, 3) == p.E - p.Q);
        CHECK(lehmer_term(p, 5) == p.E * p.E - 3 * p.E * p.Q + p.Q * p.Q);
    }
    LehmerParams fib(BigInt(1), BigInt(-1));
    const long expected[] = {1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144};
    for (unsigned n = 1; n <= 12; ++n) CHECK(lehmer_term(fib, n) == expected[n - 1]);
    CHECK_THROWS_AS(lehmer_term(fib, 0), std::invalid_argument);
}

TEST_CASE("primitive divisors on fixed cases") {
    LehmerParams fib(BigInt(1), BigInt(-1));
    CHECK(!primitive_divisor_exists(fib, 12).exists);  // 144 = 2^4 3^2, both seen earlier
    auto r17 = primitive_divisor_exists(fib, 17);
    CHECK(r17.exists);
    CHECK(r17.witness == 1597);

    LehmerParams p51(BigInt(5), BigInt(1));
    CHECK(primitive_divisor_exists(p51, 7).exists == primitive_divisor_oracle(p51, 7));
    CHECK_THROWS_AS(primitive_divisor_exists(p51, 1), std::invalid_argument);
}

TEST_CASE("primitive divisor flag agrees with the direct oracle") {
    std::mt19937_64 rng(31337);
    int tested = 0;
    while (tested < 40) {
        BigInt E = BigInt(static_cast<long>(rng() % 25)) - 12;
        BigInt Q = BigInt(static_cast<long>(rng() % 25)) - 12;
        try {
            LehmerParams p(E, Q);
            unsigned n = 2 + static_cast<unsigned>(rng() % 11);
            if (lehmer_term(p, n) == 0) continue;
            CHECK(primitive_divisor_exists(p, n).exists == primitive_divisor_oracle(p, n));
            ++tested;
        } catch (const std::invalid_argument&) {
        }
    }
}

TEST_SUITE_END();
