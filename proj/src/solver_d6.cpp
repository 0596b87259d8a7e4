#include "apsq/solver_d6.hpp"

#include <numeric>

#include "apsq/qring.hpp"
#include "descent_roots.hpp"

namespace apsq {

namespace {

BigInt binom(int n, int k) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

BigInt ipow(const BigInt& b, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

void require_odd_prime(int n, const char* who) {
    if (n < 3 || n % 2 == 0 || !is_prime(BigInt(n)))
        throw std::invalid_argument(std::string(who) + ": n must be an odd prime");
}

// Integer roots of the Im-part equation for exponent n, divisor v. The
// polynomial is even in u, so small exponents drop to half degree in
// s = u^2; large exponents go through the structured solver.
std::vector<BigInt> im_equation_roots(int n, const BigInt& v, const BigInt& rhs) {
    if (n > 13) return detail::imag_power_roots(-105, v, n, rhs);
    int half = (n - 1) / 2;
    std::vector<BigInt> sc(half + 1);
    for (int k = 1; k <= n; k += 2)
        sc[(n - k) / 2] = binom(n, k) * ipow(BigInt(-105), (k - 1) / 2) * ipow(v, k);
    sc[0] -= rhs;
    std::vector<BigInt> roots;
    for (const BigInt& s : integer_roots(IntPoly(std::move(sc)))) {
        if (s < 0) continue;
        auto [u, exact] = isqrt(s);
        if (!exact) continue;
        roots.push_back(u);
        if (u != 0) roots.push_back(-u);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

IntPoly imag_part_poly(int n, const BigInt& v) {
    require_odd_prime(n, "imag_part_poly");
    if (v == 0) throw std::invalid_argument("imag_part_poly: v must be nonzero");
    std::vector<BigInt> coeffs(n);  // degree n-1
    for (int k = 1; k <= n; k += 2)
        coeffs[n - k] = binom(n, k) * ipow(BigInt(-105), (k - 1) / 2) * ipow(v, k);
    return IntPoly(std::move(coeffs));
}

std::vector<Solution> solve_odd_prime_d6(long long r, int n) {
    if (r < 1) throw std::invalid_argument("solve_odd_prime_d6: r must be positive");
    if (r % 2 == 0 || r % 3 == 0)
        throw std::invalid_argument("solve_odd_prime_d6: r must be coprime to 6");
    require_odd_prime(n, "solve_odd_prime_d6");

    const BigInt six_half = ipow(BigInt(6), (n - 1) / 2);
    const BigInt rhs = to_big(r) * six_half;
    std::vector<Solution> out;
    for (const BigInt& v : divisors(to_big(r), true)) {
        for (const BigInt& u0 : im_equation_roots(n, v, rhs)) {
            QuadInt g = qpow(QuadInt(u0, v, -105), static_cast<unsigned long>(n));
            if (g.b != rhs) continue;
            if (g.a % six_half != 0) continue;
            BigInt X = g.a / six_half;
            BigInt xnum = X - 21 * to_big(r);
            if (xnum % 6 != 0) continue;
            BigInt N = u0 * u0 + 105 * v * v;
            if (N % 6 != 0) continue;
            Solution s;
            s.d = 6;
            s.r = r;
            s.x = xnum / 6;
            s.y = N / 6;
            s.n = n;
            s.witness = DescentWitness{-105, u0, v, v, "", X};
            BigInt yn = ipow(s.y, n);
            if (X * X + 105 * to_big(r) * to_big(r) != 6 * yn) continue;
            if (verify_solution(s)) out.push_back(std::move(s));
        }
    }
    sort_dedupe(out);
    return out;
}

D6Bundle solve_all_d6(long long r) {
    if (r < 1) throw std::invalid_argument("solve_all_d6: r must be positive");
    D6Bundle b;
    if (std::gcd(r, 6LL) != 1) {
        b.verdict = Verdict{VerdictKind::NoSolutions, "imprimitive",
                            "gcd(r,6) > 1 forces a common factor of x, y, r", {}, nullptr};
        return b;
    }
    b.exponents = exponent_set_d6(r);
    std::vector<Solution> all;
    for (long long p : b.exponents.primes) {
        auto sols = solve_odd_prime_d6(r, static_cast<int>(p));
        all.insert(all.end(), sols.begin(), sols.end());
        b.odd_prime[static_cast<int>(p)] = std::move(sols);
    }
    b.lifts = power_lifts(all);
    b.verdict = Verdict{VerdictKind::Finite, "descent", "", std::move(all), nullptr};
    return b;
}

}  // namespace apsq
