#include <doctest.h>

#include <random>

#include "apsq/qring.hpp"

using namespace apsq;

TEST_SUITE_BEGIN("qring");

TEST_CASE("construction validates the ring tag") {
    CHECK_NOTHROW(QuadInt(1, 2, -1));
    CHECK_NOTHROW(QuadInt(1, 2, -105));
    CHECK_NOTHROW(QuadInt(1, 2, 2));
    CHECK_THROWS_AS(QuadInt(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, -4), std::invalid_argument);
    CHECK_THROWS_AS(QuadInt(1, 2, 12), std::invalid_argument);
}

TEST_CASE("multiplication on fixed cases") {
    CHECK(qmul(QuadInt(2, 3, -1), QuadInt(2, 3, -1)) == QuadInt(-5, 12, -1));
    CHECK(qmul(QuadInt(1, 1, 2), QuadInt(1, -1, 2)) == QuadInt(-1, 0, 2));
    CHECK(qmul(QuadInt(-96, 6, -105), QuadInt(-3, -1, -105)) == QuadInt(918, 78, -105));
    CHECK_THROWS_AS(qmul(QuadInt(1, 0, 2), QuadInt(1, 0, -1)), std::invalid_argument);
}

TEST_CASE("conjugation and norm on fixed cases") {
    CHECK(qconj(QuadInt(2, 3, -1)) == QuadInt(2, -3, -1));
    CHECK(qconj(QuadInt(5, 0, -1)) == QuadInt(5, 0, -1));
    CHECK(qconj(QuadInt(-3, -1, -105)) == QuadInt(-3, 1, -105));
    CHECK(qnorm(QuadInt(3, 1, 2)) == 7);
    CHECK(qnorm(QuadInt(2, 3, -1)) == 13);
    CHECK(qnorm(QuadInt(-3, -1, -105)) == 114);
}

TEST_CASE("powers on fixed cases") {
    CHECK(qpow(QuadInt(1, 1, 2), 3) == QuadInt(7, 5, 2));
    CHECK(qpow(QuadInt(2, 1, -1), 5) == QuadInt(-38, 41, -1));
    CHECK(qpow(QuadInt(9, -4, -105), 0) == QuadInt(1, 0, -105));
}

TEST_CASE("algebraic properties hold on random elements") {
    std::mt19937_64 rng(424242);
    const long long ds[] = {-1, 2, -105, -5, 3};
    auto rnd = [&rng]() { return BigInt(static_cast<long>(rng() % 2001)) - 1000; };
    for (long long D : ds) {
        for (int i = 0; i < 50; ++i) {
            QuadInt x(rnd(), rnd(), D), y(rnd(), rnd(), D);
            CHECK(qnorm(qmul(x, y)) == qnorm(x) * qnorm(y));
            CHECK(qconj(qmul(x, y)) == qmul(qconj(x), qconj(y)));
            CHECK(qconj(qconj(x)) == x);
            QuadInt xc = qmul(x, qconj(x));
            CHECK(xc.b == 0);
            CHECK(xc.a == qnorm(x));
        }
        for (unsigned n = 0; n <= 12; ++n) {
            QuadInt x(rnd(), rnd(), D);
            QuadInt it(1, 0, D);
            for (unsigned k = 0; k < n; ++k) it = qmul(it, x);
            CHECK(qpow(x, n) == it);
        }
    }
}

TEST_SUITE_END();
