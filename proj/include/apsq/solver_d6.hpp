#pragma once

#include <map>

#include "apsq/expbound.hpp"
#include "apsq/sieve.hpp"
#include "apsq/solution.hpp"

namespace apsq {

/// Coefficient of sqrt(-105) in (u + v sqrt(-105))^n as a polynomial in u:
/// sum over odd k of C(n,k) u^(n-k) (-105)^((k-1)/2) v^k, degree n-1.
/// Rejects even or composite n and v = 0.
IntPoly imag_part_poly(int n, const BigInt& v);

/// Odd prime exponents for d = 6 via the Z[sqrt(-105)] descent: for each
/// signed divisor v of r, integer roots u of the Im-part equation, then
/// divisibility-gated reconstruction of X = 6x + 21r and y.
/// Requires gcd(r, 6) = 1.
std::vector<Solution> solve_odd_prime_d6(long long r, int n);

struct D6Bundle {
    Verdict verdict;
    ExponentSet exponents;
    std::map<int, std::vector<Solution>> odd_prime;
    std::vector<Solution> lifts;
};

/// NoSolutions immediately when gcd(r, 6) > 1; otherwise the union over
/// the candidate exponent set plus perfect-power lifts.
D6Bundle solve_all_d6(long long r);

}  // namespace apsq
