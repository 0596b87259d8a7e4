#include <doctest.h>

#include <set>

#include "apsq/oracle.hpp"
#include "apsq/solver_d2.hpp"
#include "descent_roots.hpp"
#include "solver_d2_detail.hpp"

using namespace apsq;

namespace {

bool has(const std::vector<Solution>& sols, long x, long y, int n) {
    for (const auto& s : sols)
        if (s.x == BigInt(x) && s.y == BigInt(y) && s.n == n) return true;
    return false;
}

std::set<std::pair<BigInt, BigInt>> xy_set(const std::vector<Solution>& sols) {
    std::set<std::pair<BigInt, BigInt>> out;
    for (const auto& s : sols) out.emplace(s.x, s.y);
    return out;
}

// Pell identity for n = 2 members.
bool pell_identity(const Solution& s) {
    BigInt lhs = (2 * s.x + 3 * to_big(s.r)) * (2 * s.x + 3 * to_big(s.r)) - 2 * s.y * s.y;
    return lhs == -to_big(s.r) * to_big(s.r);
}

}  // namespace

TEST_SUITE_BEGIN("solver_d2");

TEST_CASE("pell_representation canonical elements") {
    CHECK(pell_representation(7) == QuadInt(3, 1, 2));
    CHECK(pell_representation(17) == QuadInt(5, 2, 2));
    CHECK(pell_representation(23) == QuadInt(5, 1, 2));
    for (long long q : {7, 17, 23, 31, 41, 47, 71, 73, 79, 89, 97, 103, 113, 127, 137, 151}) {
        BigInt nm = qnorm(pell_representation(q));
        CHECK((nm == to_big(q) || nm == -to_big(q)));
    }
    CHECK_THROWS_AS(pell_representation(3), std::invalid_argument);
    CHECK_THROWS_AS(pell_representation(5), std::invalid_argument);
    CHECK_THROWS_AS(pell_representation(15), std::invalid_argument);
}

TEST_CASE("n=2 residue obstruction and family") {
    Verdict v3 = solve_n2(3);
    CHECK(v3.kind == VerdictKind::NoSolutions);
    CHECK(v3.reason == kTagD2N2Residue);
    CHECK(solve_n2(10).kind == VerdictKind::NoSolutions);
    CHECK(solve_n2(5).kind == VerdictKind::NoSolutions);

    Verdict v1 = solve_n2(1);
    REQUIRE(v1.kind == VerdictKind::Family);
    REQUIRE(v1.family != nullptr);
    CHECK(v1.family->prime_reps.empty());
    CHECK(pell_member(*v1.family, 0, +1, 0) == Solution{2, 1, BigInt(-1), BigInt(1), 2, {}});
    CHECK(pell_member(*v1.family, 0, +1, 1) == Solution{2, 1, BigInt(2), BigInt(5), 2, {}});
    CHECK(pell_member(*v1.family, 0, +1, 2) == Solution{2, 1, BigInt(19), BigInt(29), 2, {}});
    // negative k goes through the inverse unit -1 + sqrt(2)
    CHECK(pell_member(*v1.family, 0, +1, -1) == Solution{2, 1, BigInt(-2), BigInt(1), 2, {}});

    Verdict v7 = solve_n2(7);
    REQUIRE(v7.kind == VerdictKind::Family);
    REQUIRE(v7.family->prime_reps.size() == 1);
    CHECK(v7.family->prime_reps[0].rep == QuadInt(3, 1, 2));
}

TEST_CASE("family members satisfy both forms of the n=2 equation") {
    for (long long r : {1, 7, 17, 49, 119}) {
        Verdict v = solve_n2(r);
        REQUIRE(v.kind == VerdictKind::Family);
        auto members = family_members(*v.family, -3, 3);
        CHECK(!members.empty());
        for (const auto& m : members) {
            CHECK(verify_solution(m));
            CHECK(pell_identity(m));
        }
    }
}

TEST_CASE("the two quartic forms and their witness values") {
    auto [f1, f2] = thue_forms(17);
    CHECK(f1.coefficients == std::array<long, 5>{1, -4, -6, 4, 1});
    CHECK(f2.coefficients == std::array<long, 5>{1, 4, -6, -4, 1});
    CHECK(f1.rhs == 17);
    // the second form is the first with arguments swapped
    for (long u = -5; u <= 5; ++u)
        for (long v = -5; v <= 5; ++v)
            CHECK(f2.eval(BigInt(u), BigInt(v)) == f1.eval(BigInt(v), BigInt(u)));
    // every n=4 witness evaluates one form to +-r
    for (long long r : {1, 17, 31, 799}) {
        auto [g1, g2] = thue_forms(r);
        for (const auto& s : solve_n4(r, 1000)) {
            REQUIRE(s.witness.has_value());
            const auto& w = *s.witness;
            BigInt val = (w.unit_case == "+1" || w.unit_case == "-1")
                             ? g1.eval(w.u, w.v)
                             : g2.eval(w.u, w.v);
            CHECK((val == g1.rhs || val == -g1.rhs));
        }
    }
    CHECK_THROWS_AS(thue_forms(0), std::invalid_argument);
}

TEST_CASE("quartic exponent on fixed cases") {
    auto r1 = solve_n4(1, 1000);
    CHECK(xy_set(r1) == std::set<std::pair<BigInt, BigInt>>{
                            {-121, 13}, {-2, 1}, {-1, 1}, {118, 13}});
    auto r17 = solve_n4(17, 1000);
    CHECK(xy_set(r17) == std::set<std::pair<BigInt, BigInt>>{{-41, 5}, {-10, 5}});
    auto r31 = solve_n4(31, 1000);
    CHECK(xy_set(r31) == std::set<std::pair<BigInt, BigInt>>{{-55, 5}, {-38, 5}});
    CHECK(solve_n4(2, 100).empty());
    auto r799 = solve_n4(799, 1000);
    CHECK(r799.size() == 4);
    CHECK(has(r799, -79, 41, 4));
    CHECK(has(r799, -2318, 41, 4));
    // witnesses carry coprime coordinates with u^2 + v^2 = y and odd sum
    for (const auto& s : r799) {
        REQUIRE(s.witness.has_value());
        const auto& w = *s.witness;
        BigInt g;
        mpz_gcd(g.get_mpz_t(), w.u.get_mpz_t(), w.v.get_mpz_t());
        CHECK(g == 1);
        CHECK(w.u * w.u + w.v * w.v == s.y);
        CHECK((w.u + w.v) % 2 != 0);
    }
}

TEST_CASE("quartic search agrees between the word-size and bignum paths") {
    for (long long r : {1, 17, 31, 239}) {
        auto fast = solve_n4(r, 60);
        auto big = detail::solve_n4_bignum(r, 60);
        CHECK(fast == big);
    }
    CHECK(xy_set(solve_n4(17, 60)) == std::set<std::pair<BigInt, BigInt>>{{-41, 5}, {-10, 5}});
}

TEST_CASE("odd prime exponents on fixed cases") {
    auto r3n5 = solve_odd_prime(3, 5);
    CHECK(xy_set(r3n5) == std::set<std::pair<BigInt, BigInt>>{{-44, 5}, {35, 5}});
    auto r1n3 = solve_odd_prime(1, 3);
    CHECK(xy_set(r1n3) == std::set<std::pair<BigInt, BigInt>>{{-2, 1}, {-1, 1}});
    auto r5n3 = solve_odd_prime(5, 3);  // 47^2 + 52^2 = 17^3
    CHECK(xy_set(r5n3) == std::set<std::pair<BigInt, BigInt>>{{-57, 17}, {42, 17}});
    CHECK(solve_odd_prime(3, 3).empty());
    auto r1n5 = solve_odd_prime(1, 5);
    CHECK(xy_set(r1n5) == std::set<std::pair<BigInt, BigInt>>{{-2, 1}, {-1, 1}});
    CHECK(solve_odd_prime(4, 3).empty());  // even r
    CHECK_THROWS_AS(solve_odd_prime(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(solve_odd_prime(3, 9), std::invalid_argument);
}

TEST_CASE("descent witnesses respect the divisor constraint") {
    for (int n : {3, 5, 7, 13}) {
        for (long long r : {1, 3, 9, 15, 35}) {
            for (const auto& s : solve_odd_prime(r, n)) {
                REQUIRE(s.witness.has_value());
                const auto& w = *s.witness;
                BigInt t = w.u + (n % 4 == 1 ? w.v : -w.v);
                CHECK(t == w.seed_divisor);
                CHECK(to_big(r) % t == 0);
            }
        }
    }
}

TEST_CASE("reflection closure of emitted sets") {
    for (long long r : {1, 3, 17, 31, 799}) {
        for (const auto& s : solve_n4(r, 1000)) {
            Solution mirror = s;
            mirror.x = -s.x - 3 * to_big(r);
            mirror.witness.reset();
            auto all = solve_n4(r, 1000);
            CHECK(std::find(all.begin(), all.end(), mirror) != all.end());
        }
    }
    for (long long r : {1, 3}) {
        for (int n : {3, 5}) {
            auto all = solve_odd_prime(r, n);
            for (const auto& s : all) {
                Solution mirror = s;
                mirror.x = -s.x - 3 * to_big(r);
                CHECK(std::find(all.begin(), all.end(), mirror) != all.end());
            }
        }
    }
}

TEST_CASE("structured root solver agrees with the polynomial route") {
    // Plant alpha = u + iv with u = t + sign*v and check both routes find v.
    for (int n : {17, 29}) {
        int sign = n % 4 == 1 ? -1 : +1;
        for (long u0 = -4; u0 <= 4; ++u0) {
            for (long v0 = -3; v0 <= 3; ++v0) {
                if (u0 == 0 && v0 == 0) continue;
                QuadInt a(u0, v0, -1);
                QuadInt p = qpow(a, static_cast<unsigned>(n));
                BigInt rhs = p.a + p.b;
                BigInt t = u0 - sign * v0;
                auto roots = detail::d2_sum_roots(t, sign, n, rhs);
                CHECK(std::find(roots.begin(), roots.end(), BigInt(v0)) != roots.end());
                for (const BigInt& v : roots) {
                    QuadInt q(t + sign * v, v, -1);
                    CHECK(qpow(q, static_cast<unsigned>(n)).a +
                              qpow(q, static_cast<unsigned>(n)).b ==
                          rhs);
                }
            }
        }
    }
}

TEST_CASE("oracle containment for n = 2 and n = 4 windows") {
    for (long long r = 1; r <= 60; ++r) {
        auto oracle2 = oracle_enumerate(2, r, {2}, 10000);
        Verdict v = solve_n2(r);
        if (v.kind == VerdictKind::NoSolutions) {
            CHECK(oracle2.empty());
        } else {
            auto members = family_members(*v.family, -10, 10);
            for (const auto& s : oracle2)
                CHECK(std::find(members.begin(), members.end(), s) != members.end());
        }
        auto oracle4 = oracle_enumerate(2, r, {4}, 10000);
        std::vector<Solution> solver4;
        for (const auto& s : solve_n4(r, 1000))
            if (s.y <= 10000) solver4.push_back(s);
        CHECK(xy_set(solver4) == xy_set(oracle4));
    }
}

TEST_CASE("structured route handles planted tail roots for d=2") {
    // critical bound for |t|=1, n=29 is ~31; plant far beyond it
    for (long v0 : {500L, -500L, 40000L}) {
        int n = 29;
        int sign = +1;  // 29 = 1 mod 4 -> u = t - v, sign = -1; test both
        for (int s : {-1, +1}) {
            sign = s;
            BigInt t = 1;
            QuadInt a(t + sign * v0, v0, -1);
            QuadInt p = qpow(a, static_cast<unsigned>(n));
            BigInt rhs = p.a + p.b;
            auto roots = detail::d2_sum_roots(t, sign, n, rhs);
            CHECK(std::find(roots.begin(), roots.end(), BigInt(v0)) != roots.end());
        }
    }
}

TEST_CASE("bundle solves everything and lifts perfect powers") {
    D2Bundle b = solve_all_d2(1457, D2Options{1000, 3});
    CHECK(has(b.n4, 8839, 125, 4));
    CHECK(has(b.n4, -13210, 125, 4));
    bool lift_found = false;
    for (const auto& s : b.lifts)
        if (s.x == 8839 && s.y == 5 && s.n == 12) lift_found = true;
    CHECK(lift_found);

    D2Bundle b3 = solve_all_d2(3, D2Options{200, 2});
    CHECK(b3.n2.kind == VerdictKind::NoSolutions);
    CHECK(b3.n4.empty());
    CHECK(b3.exponents.primes == std::vector<long long>{3, 5});
    CHECK(b3.odd_prime.at(3).empty());
    CHECK(xy_set(b3.odd_prime.at(5)) == std::set<std::pair<BigInt, BigInt>>{{-44, 5}, {35, 5}});
}

TEST_SUITE_END();
