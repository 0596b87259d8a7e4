#include "apsq/numutil.hpp"

#include <algorithm>
#include <cstdint>

namespace apsq {

namespace {

BigInt abs_big(const BigInt& x) {
    BigInt r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witnessed
}

// Deterministic Miller-Rabin below 3.317e24 (12-base set); BPSW-style
// fallback above that, far beyond anything this library touches.
bool is_prime_impl(const BigInt& n) {
    if (n < 2) return false;
    static const unsigned small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                            23, 29, 31, 37, 41, 43, 47};
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    static const BigInt det_limit("3317044064679887385961981");
    if (n >= det_limit) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;

    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

// Brent's cycle variant of Pollard rho; n odd composite, not a prime power
// of a small prime. Deterministic: the constant c increases on failure.
BigInt pollard_brent(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1, q = 1, xs = 0;
        unsigned long r = 1, m = 128;
        auto step = [&](BigInt& v) { v = (v * v + c) % n; };
        while (d == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            for (unsigned long k = 0; k < r && d == 1; k += m) {
                xs = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    q = q * abs_big(x - y) % n;
                }
                mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                step(xs);
                mpz_gcd(d.get_mpz_t(), BigInt(abs_big(x - xs)).get_mpz_t(), n.get_mpz_t());
            }
        }
        if (d != n) return d;
    }
}

void factor_into(BigInt m, std::vector<BigInt>& primes) {
    if (m == 1) return;
    if (is_prime_impl(m)) {
        primes.push_back(m);
        return;
    }
    BigInt d = pollard_brent(m);
    factor_into(d, primes);
    factor_into(m / d, primes);
}

}  // namespace

BigInt Factorization::product() const {
    BigInt p = 1;
    for (const auto& [q, e] : factors) {
        BigInt t;
        mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), e);
        p *= t;
    }
    return p;
}

bool is_prime(const BigInt& n) { return is_prime_impl(n); }

Factorization factorize(const BigInt& m) {
    if (m <= 0) throw std::invalid_argument("factorize: argument must be positive");
    Factorization f;
    f.value = m;
    BigInt rest = m;
    std::vector<BigInt> primes;
    // trial division first; anything that survives goes to rho
    for (unsigned long p = 2; p < 100000; p = (p == 2 ? 3 : p + 2)) {
        if (BigInt(p) * p > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    factor_into(rest, primes);
    std::sort(primes.begin(), primes.end());
    for (const auto& p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p)
            f.factors.back().second++;
        else
            f.factors.emplace_back(p, 1);
    }
    for (const auto& [p, e] : f.factors) {
        (void)e;
        if (!is_prime_impl(p)) throw std::logic_error("factorize: non-prime factor");
    }
    return f;
}

std::vector<BigInt> divisors(const BigInt& m, bool include_negative) {
    if (m <= 0) throw std::invalid_argument("divisors: argument must be positive");
    Factorization f = factorize(m);
    std::vector<BigInt> ds = {1};
    for (const auto& [p, e] : f.factors) {
        size_t base = ds.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    if (include_negative) {
        std::vector<BigInt> all;
        all.reserve(2 * ds.size());
        for (auto it = ds.rbegin(); it != ds.rend(); ++it) all.push_back(-*it);
        for (const auto& d : ds) all.push_back(d);
        return all;
    }
    return ds;
}

int legendre(const BigInt& a, const BigInt& p) {
    if (p <= 2 || mpz_even_p(p.get_mpz_t()) || !is_prime_impl(p))
        throw std::invalid_argument("legendre: modulus must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

unsigned valuation(const BigInt& m, const BigInt& p) {
    if (m == 0) throw std::invalid_argument("valuation: argument must be nonzero");
    if (!is_prime_impl(p)) throw std::invalid_argument("valuation: modulus must be prime");
    BigInt rest = m;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++e;
    }
    return e;
}

std::pair<BigInt, bool> isqrt(const BigInt& m) {
    if (m < 0) throw std::invalid_argument("isqrt: argument must be nonnegative");
    BigInt root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
    return {root, rem == 0};
}

std::pair<BigInt, unsigned> perfect_power(const BigInt& y) {
    BigInt ay = abs_big(y);
    if (ay <= 1) throw std::invalid_argument("perfect_power: |argument| must be >= 2");
    BigInt base = y;
    unsigned exponent = 1;
    bool negative = y < 0;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        size_t bits = mpz_sizeinbase(BigInt(abs_big(base)).get_mpz_t(), 2);
        for (unsigned e = 2; e <= bits; ++e) {
            if (!is_prime_impl(BigInt(e))) continue;
            if (negative && e == 2) continue;
            BigInt root;
            int exact = mpz_root(root.get_mpz_t(), base.get_mpz_t(), e);
            if (exact != 0) {
                base = root;
                exponent *= e;
                reduced = true;
                break;
            }
        }
    }
    return {base, exponent};
}

void IntPoly::normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

BigInt IntPoly::eval(const BigInt& u) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<BigInt> d;
    for (size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * static_cast<long>(i));
    return IntPoly(std::move(d));
}

namespace {

int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

// Fujiwara-style bound on the magnitude of all real roots, computed with
// exact integer k-th roots. Much tighter than the Cauchy bound when the
// trailing coefficients dwarf the leading one.
BigInt root_bound(const IntPoly& f) {
    int d = f.degree();
    BigInt lead = abs_big(f.coeffs[d]);
    BigInt best = 1;
    for (int k = 1; k <= d; ++k) {
        BigInt q = abs_big(f.coeffs[d - k]) / lead + 1;
        BigInt rk;
        mpz_root(rk.get_mpz_t(), q.get_mpz_t(), k);
        rk += 1;
        best = std::max(best, rk);
    }
    return 2 * best + 1;
}

// Returns integers that separate every sign change of g inside [lo, hi]:
// between consecutive marks (with lo/hi as sentinels) g either keeps one
// sign or the gap is a unit interval with no interior integers. Built
// recursively from the marks of g', which make each non-unit cell
// monotone, so a sign change there is found by plain bisection. Inner
// marks are forwarded so that wiggles hidden inside their unit cells
// stay separated at the level above.
void sign_change_marks(const IntPoly& g, const BigInt& lo, const BigInt& hi,
                       std::vector<BigInt>& out) {
    if (g.degree() <= 0) return;
    std::vector<BigInt> inner;
    sign_change_marks(g.derivative(), lo, hi, inner);
    inner.push_back(lo);
    inner.push_back(hi);
    std::sort(inner.begin(), inner.end());
    inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
    out.insert(out.end(), inner.begin(), inner.end());
    for (size_t i = 0; i + 1 < inner.size(); ++i) {
        BigInt a = inner[i], b = inner[i + 1];
        int sa = sgn(g.eval(a)), sb = sgn(g.eval(b));
        if (sa == 0) out.push_back(a);
        if (sb == 0 && i + 2 == inner.size()) out.push_back(b);
        if (sa * sb >= 0) continue;
        while (b - a > 1) {
            BigInt m = (a + b) / 2;
            int sm = sgn(g.eval(m));
            if (sm == 0) {
                out.push_back(m);
                break;
            }
            (sm == sa ? a : b) = m;
        }
        if (b - a == 1) {
            out.push_back(a);
            out.push_back(b);
        }
    }
}

}  // namespace

std::vector<BigInt> integer_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    IntPoly f = p;
    std::vector<BigInt> roots;
    if (f.coeffs[0] == 0) {
        roots.emplace_back(0);
        size_t k = 0;
        while (f.coeffs[k] == 0) ++k;
        f = IntPoly(std::vector<BigInt>(f.coeffs.begin() + k, f.coeffs.end()));
    }
    if (f.degree() >= 1) {
        BigInt bound = root_bound(f);
        std::vector<BigInt> marks;
        sign_change_marks(f.derivative(), -bound, bound, marks);
        marks.push_back(-bound);
        marks.push_back(bound);
        std::sort(marks.begin(), marks.end());
        marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
        for (size_t i = 0; i + 1 < marks.size(); ++i) {
            BigInt a = marks[i], b = marks[i + 1];
            int sa = sgn(f.eval(a)), sb = sgn(f.eval(b));
            if (sa == 0) roots.push_back(a);
            if (sb == 0 && i + 2 == marks.size()) roots.push_back(b);
            if (sa * sb >= 0) continue;
            while (b - a > 1) {
                BigInt m = (a + b) / 2;
                int sm = sgn(f.eval(m));
                if (sm == 0) {
                    a = m;
                    break;
                }
                (sm == sa ? a : b) = m;
            }
            if (f.eval(a) == 0) roots.push_back(a);
            if (f.eval(b) == 0) roots.push_back(b);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace apsq
