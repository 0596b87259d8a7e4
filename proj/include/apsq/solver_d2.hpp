#pragma once

#include <array>
#include <map>

#include "apsq/expbound.hpp"
#include "apsq/qring.hpp"
#include "apsq/sieve.hpp"
#include "apsq/solution.hpp"

namespace apsq {

/// The infinite n = 2 solution family: one norm +-q representative per
/// prime divisor of r; members are +- R^2 (1+sqrt2)^(2k+1) over all
/// conjugate choices of R = prod rep_i^mult_i.
struct PellFamily {
    long long r = 0;
    struct PrimeRep {
        long long q;
        QuadInt rep;
        unsigned mult;
    };
    std::vector<PrimeRep> prime_reps;
    std::string description;
};

/// One of the two degree-4 binary forms whose values at coprime (u, v)
/// with u + v odd pick out the n = 4 descent witnesses:
///   u^4 - 4u^3 v - 6u^2 v^2 + 4u v^3 + v^4   (unit +-1)
///   u^4 + 4u^3 v - 6u^2 v^2 - 4u v^3 + v^4   (unit +-i)
struct ThueForm {
    std::array<long, 5> coefficients;  // of u^4, u^3 v, u^2 v^2, u v^3, v^4
    BigInt rhs;

    BigInt eval(const BigInt& u, const BigInt& v) const;
};

/// The two quartic forms with right-hand side r.
std::pair<ThueForm, ThueForm> thue_forms(long long r);

/// Canonical element of Z[sqrt 2] with norm +-q: minimal |b|, then a > 0,
/// preferring norm +q. Rejects primes with q = +-3 (mod 8).
QuadInt pell_representation(long long q);

/// n = 2: residue obstruction (NoSolutions) or the Pell family.
Verdict solve_n2(long long r);

/// Single family member for a conjugate-choice mask, global sign, and
/// unit index k (unit power 2k+1, negative k through the inverse unit).
Solution pell_member(const PellFamily& fam, unsigned conj_mask, int sign, long long k);

/// All members for k in [k_min, k_max] over both signs and every
/// conjugate choice, deduplicated and sorted.
std::vector<Solution> family_members(const PellFamily& fam, long long k_min, long long k_max);

/// n = 4 via the two quartic forms, exhaustive over |u|,|v| <= search_bound
/// with gcd(u,v) = 1 and u+v odd.
std::vector<Solution> solve_n4(long long r, long long search_bound);

/// Odd prime exponents via the Gaussian descent: for each signed divisor
/// t of r, solve Re(alpha^n) + Im(alpha^n) = r with u = t -+ v.
std::vector<Solution> solve_odd_prime(long long r, int n);

struct D2Options {
    long long thue_bound = 1000;
    long long family_k = 10;
};

struct D2Bundle {
    Verdict n2;
    std::vector<Solution> n2_members;
    std::vector<Solution> n4;
    ExponentSet exponents;
    std::map<int, std::vector<Solution>> odd_prime;
    std::vector<Solution> lifts;
};

/// Runs n = 2, n = 4, and every candidate odd prime exponent, then the
/// perfect-power lifts of everything found.
D2Bundle solve_all_d2(long long r, const D2Options& opts = {});

}  // namespace apsq
