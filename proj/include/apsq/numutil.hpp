#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace apsq {

using BigInt = mpz_class;

// mpz_class has no long long constructor; long is 64-bit on every
// platform this builds for.
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

/// Prime factorization of a positive integer, factors sorted by prime.
struct Factorization {
    BigInt value;
    std::vector<std::pair<BigInt, unsigned>> factors;  // (prime, multiplicity)

    BigInt product() const;
};

/// Dense univariate polynomial with integer coefficients.
/// coeffs[i] is the coefficient of u^i; an empty vector is the zero
/// polynomial, otherwise the top coefficient is nonzero.
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    void normalize();
    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    BigInt eval(const BigInt& u) const;
    IntPoly derivative() const;
};

bool is_prime(const BigInt& n);

/// Canonical prime factorization. Rejects m <= 0.
Factorization factorize(const BigInt& m);

/// All positive divisors of m in increasing order; with include_negative,
/// the negatives come first (sorted ascending overall). Rejects m <= 0.
std::vector<BigInt> divisors(const BigInt& m, bool include_negative = false);

/// Legendre symbol (a/p) for an odd prime p. Rejects even or composite p.
int legendre(const BigInt& a, const BigInt& p);

/// Largest e with p^e | m. Rejects m = 0 and composite p.
unsigned valuation(const BigInt& m, const BigInt& p);

/// (floor(sqrt(m)), m is a perfect square). Rejects m < 0.
std::pair<BigInt, bool> isqrt(const BigInt& m);

/// Writes y = b^e with e maximal and returns (b, e); e = 1 when y is not
/// a perfect power. Negative y admits only odd exponents. Rejects |y| <= 1.
std::pair<BigInt, unsigned> perfect_power(const BigInt& y);

/// Exactly the integer roots of p, sorted, each listed once.
/// Rejects the zero polynomial.
std::vector<BigInt> integer_roots(const IntPoly& p);

}  // namespace apsq
