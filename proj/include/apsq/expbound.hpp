#pragma once

#include <map>
#include <vector>

#include "apsq/numutil.hpp"

namespace apsq {

/// Finite set of candidate odd prime exponents for a given (d, r), with
/// the origin of each prime: always-included base prime, and/or induced
/// by a prime divisor q of r.
struct ExponentSet {
    int d = 0;
    long long r = 0;
    std::vector<long long> primes;  // sorted ascending

    struct Provenance {
        bool base = false;
        std::vector<long long> from_q;
    };
    std::map<long long, Provenance> provenance;

    bool contains(long long p) const;
};

/// d = 2: base {3, 5}, plus odd primes p | (q - (-1/q)) for odd primes q | r.
ExponentSet exponent_set_d2(long long r);

/// d = 6: base {3, 5, 7, 11, 13}, plus odd primes p | (q - (-105/q)) for
/// primes q | r with q coprime to 210. Requires gcd(r, 6) = 1.
ExponentSet exponent_set_d6(long long r);

/// Lehmer pair data: E = (alpha+beta)^2, Q = alpha*beta, nonzero coprime
/// integers with alpha/beta not a root of unity (E not in {0,Q,2Q,3Q,4Q}).
struct LehmerParams {
    BigInt E;
    BigInt Q;

    LehmerParams(BigInt e, BigInt q);
};

/// n-th Lehmer term: (alpha^n - beta^n) / (alpha - beta) for odd n,
/// divided by a further (alpha + beta) for even n. Always an integer.
BigInt lehmer_term(const LehmerParams& params, unsigned n);

struct PrimitiveDivisorResult {
    bool exists = false;
    BigInt witness;  // a prime dividing term n but no earlier term, when exists
};

/// Whether some prime divides the n-th term but neither (alpha^2-beta^2)^2
/// nor any earlier term. Requires n >= 2 and a nonzero n-th term.
PrimitiveDivisorResult primitive_divisor_exists(const LehmerParams& params, unsigned n);

}  // namespace apsq
