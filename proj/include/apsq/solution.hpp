#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "apsq/numutil.hpp"

namespace apsq {

/// Data certifying how a solution was reconstructed: the ring element
/// coordinates (u, v), the divisor of r that seeded the search, the unit
/// branch taken, and (for d = 6) the intermediate X = 6x + 21r.
struct DescentWitness {
    long long ring_D = 0;
    BigInt u;
    BigInt v;
    BigInt seed_divisor;
    std::string unit_case;
    std::optional<BigInt> X;
};

/// A verified primitive solution of the d-term sum-of-squares equation.
struct Solution {
    int d = 0;
    long long r = 0;
    BigInt x;
    BigInt y;
    int n = 0;
    std::optional<DescentWitness> witness;

    auto key() const { return std::tie(r, n, x, y); }
    bool operator==(const Solution& o) const {
        return d == o.d && r == o.r && x == o.x && y == o.y && n == o.n;
    }
    bool operator<(const Solution& o) const { return key() < o.key(); }
};

/// (x+r)^2 + ... + (x+dr)^2, expanded form d x^2 + d(d+1) x r + c_d r^2.
inline BigInt progression_sum(int d, const BigInt& r, const BigInt& x) {
    BigInt cd = BigInt(d) * (d + 1) * (2 * d + 1) / 6;
    return BigInt(d) * x * x + BigInt(d) * (d + 1) * x * r + cd * r * r;
}

inline bool is_primitive(const BigInt& x, const BigInt& y, const BigInt& r) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
    return g == 1;
}

/// Checks the defining equation exactly and primitivity.
inline bool verify_solution(const Solution& s) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), s.y.get_mpz_t(), s.n);
    return progression_sum(s.d, to_big(s.r), s.x) == pw && is_primitive(s.x, s.y, to_big(s.r));
}

void sort_dedupe(std::vector<Solution>& sols);

/// Solutions whose y is a perfect power b^e restated at every exponent
/// multiple: (x, b^(e/m), m*n) for each divisor m >= 2 of e.
std::vector<Solution> power_lifts(const std::vector<Solution>& sols);

}  // namespace apsq
