#include "apsq/expbound.hpp"

#include <algorithm>

namespace apsq {

namespace {

// Shared construction: base primes plus odd primes p | (q - (-c/q)) over
// the admissible prime divisors q of r.
ExponentSet build_set(int d, long long r, const std::vector<long long>& base, long long c,
                      const std::vector<long long>& excluded_q) {
    ExponentSet es;
    es.d = d;
    es.r = r;
    for (long long b : base) {
        es.provenance[b].base = true;
    }
    for (const auto& [q, e] : factorize(to_big(r)).factors) {
        (void)e;
        if (q == 2) continue;
        long long qi = q.get_si();
        if (std::find(excluded_q.begin(), excluded_q.end(), qi) != excluded_q.end()) continue;
        BigInt target = q - legendre(to_big(-c), q);
        for (const auto& [p, pe] : factorize(target).factors) {
            (void)pe;
            if (p == 2) continue;
            es.provenance[p.get_si()].from_q.push_back(qi);
        }
    }
    for (const auto& [p, prov] : es.provenance) {
        (void)prov;
        es.primes.push_back(p);
    }
    std::sort(es.primes.begin(), es.primes.end());
    return es;
}

}  // namespace

bool ExponentSet::contains(long long p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

ExponentSet exponent_set_d2(long long r) {
    if (r < 1) throw std::invalid_argument("exponent_set_d2: r must be positive");
    // c = 1: the constant C = r^2 has squarefree part 1.
    return build_set(2, r, {3, 5}, 1, {});
}

ExponentSet exponent_set_d6(long long r) {
    if (r < 1) throw std::invalid_argument("exponent_set_d6: r must be positive");
    if (r % 2 == 0 || r % 3 == 0)
        throw std::invalid_argument("exponent_set_d6: r must be coprime to 6");
    // q must avoid 210 = 2*3*5*7; 2 and 3 cannot divide r here.
    return build_set(6, r, {3, 5, 7, 11, 13}, 105, {5, 7});
}

LehmerParams::LehmerParams(BigInt e, BigInt q) : E(std::move(e)), Q(std::move(q)) {
    if (E == 0 || Q == 0) throw std::invalid_argument("LehmerParams: E, Q must be nonzero");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), E.get_mpz_t(), Q.get_mpz_t());
    if (g != 1) throw std::invalid_argument("LehmerParams: E, Q must be coprime");
    for (int k = 1; k <= 4; ++k) {
        if (E == k * Q) throw std::invalid_argument("LehmerParams: alpha/beta is a root of unity");
    }
}

BigInt lehmer_term(const LehmerParams& params, unsigned n) {
    if (n < 1) throw std::invalid_argument("lehmer_term: index must be >= 1");
    // Lucas recurrence U_{k+1} = P U_k - Q U_{k-1} carried in Z[P]/(P^2 - E):
    // odd-index terms are rational (a_k), even-index ones are a_k * P (b_k).
    // De-scaling by parity turns U_k into the Lehmer term.
    BigInt a_prev = 1;  // U_1
    BigInt b_prev = 1;  // U_2 = P
    if (n == 1) return a_prev;
    if (n == 2) return b_prev;
    for (unsigned k = 3; k <= n; ++k) {
        if (k % 2 == 1) {
            BigInt a = params.E * b_prev - params.Q * a_prev;
            a_prev = a;
        } else {
            BigInt b = a_prev - params.Q * b_prev;
            b_prev = b;
        }
    }
    return n % 2 == 1 ? a_prev : b_prev;
}

PrimitiveDivisorResult primitive_divisor_exists(const LehmerParams& params, unsigned n) {
    if (n < 2) throw std::invalid_argument("primitive_divisor_exists: index must be >= 2");
    BigInt un = lehmer_term(params, n);
    if (un == 0) throw std::invalid_argument("primitive_divisor_exists: term is zero");

    // (alpha^2 - beta^2)^2 = E * (E - 4Q)
    BigInt blocked = params.E * (params.E - 4 * params.Q);
    for (unsigned k = 1; k < n; ++k) blocked *= lehmer_term(params, k);
    mpz_abs(blocked.get_mpz_t(), blocked.get_mpz_t());

    // Strip from the n-th term every prime shared with the blocked product;
    // anything left is made of new primes only.
    BigInt g = un;
    mpz_abs(g.get_mpz_t(), g.get_mpz_t());
    while (true) {
        BigInt h;
        mpz_gcd(h.get_mpz_t(), g.get_mpz_t(), blocked.get_mpz_t());
        if (h == 1) break;
        g /= h;
    }
    PrimitiveDivisorResult res;
    res.exists = g > 1;
    if (res.exists) res.witness = factorize(g).factors.front().first;
    return res;
}

}  // namespace apsq
