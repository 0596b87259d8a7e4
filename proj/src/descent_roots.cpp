#include "descent_roots.hpp"

#include <algorithm>
#include <stdexcept>

#include "apsq/qring.hpp"

namespace apsq::detail {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 big_mod(const BigInt& x, u64 m) {
    BigInt r = x % static_cast<unsigned long>(m);
    if (r < 0) r += static_cast<unsigned long>(m);
    return r.get_ui();
}

// (a + b*w)^n in Z[w]/(w^2 - D) mod m, returned as (re, im).
struct RingElem {
    u64 re, im;
};

RingElem ring_pow_mod(u64 a, u64 b, u64 d_mod, int n, u64 m) {
    RingElem acc{1 % m, 0};
    RingElem base{a % m, b % m};
    unsigned e = static_cast<unsigned>(n);
    while (e > 0) {
        if (e & 1) {
            u64 re = (mulmod(acc.re, base.re, m) + mulmod(d_mod, mulmod(acc.im, base.im, m), m)) % m;
            u64 im = (mulmod(acc.re, base.im, m) + mulmod(acc.im, base.re, m)) % m;
            acc = {re, im};
        }
        e >>= 1;
        if (e > 0) {
            u64 re = (mulmod(base.re, base.re, m) + mulmod(d_mod, mulmod(base.im, base.im, m), m)) % m;
            u64 im = 2 * mulmod(base.re, base.im, m) % m;
            base = {re, im};
        }
    }
    return acc;
}

// Equation policies. Each exposes f as an exact map Z -> Z and as a map
// Z/m -> Z/m, plus a bound beyond which f is strictly monotone (all real
// critical points of f lie inside it).

struct ImagPowerEq {
    long long D;
    BigInt v;
    int n;
    BigInt rhs;

    BigInt eval(const BigInt& u) const {
        return qpow(QuadInt(u, v, D), static_cast<unsigned long>(n)).b - rhs;
    }
    u64 eval_mod(u64 u, u64 m) const {
        u64 d_mod = big_mod(to_big(D), m);
        RingElem p = ring_pow_mod(u, big_mod(v, m), d_mod, n, m);
        return (p.im + m - big_mod(rhs, m)) % m;
    }
    // Critical points are the real roots of the same Im-form at index n-1,
    // all of magnitude < |v| * sqrt(|D|) * (n-1)/pi.
    BigInt crit_bound() const {
        BigInt av = v < 0 ? BigInt(-v) : v;
        BigInt sq = isqrt(to_big(-D)).first + 1;
        return BigInt(n) * av * sq + 1;
    }
};

struct D2SumEq {
    BigInt t;
    int sign;  // u = t + sign * v
    int n;
    BigInt rhs;

    BigInt eval(const BigInt& vv) const {
        QuadInt a(t + sign * vv, vv, -1);
        QuadInt p = qpow(a, static_cast<unsigned long>(n));
        return p.a + p.b - rhs;
    }
    u64 eval_mod(u64 vv, u64 m) const {
        u64 tm = big_mod(t, m);
        u64 um = sign > 0 ? (tm + vv) % m : (tm + m - vv % m) % m;
        RingElem p = ring_pow_mod(um, vv % m, m - 1, n, m);
        return (p.re + p.im + 2 * m - big_mod(rhs, m)) % m;
    }
    // Critical points sit where alpha(v)^(n-1) is real or purely
    // imaginary; on the line alpha = (t +- v) + iv those have |v| < |t| n.
    BigInt crit_bound() const {
        BigInt at = t < 0 ? BigInt(-t) : t;
        return BigInt(n) * at + 2;
    }
};

const std::vector<u64>& sieve_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> ps;
        for (u64 p = 53; ps.size() < 120; ++p)
            if (is_prime(BigInt(static_cast<unsigned long>(p)))) ps.push_back(p);
        return ps;
    }();
    return primes;
}

int sgn(const BigInt& x) { return mpz_sgn(x.get_mpz_t()); }

// Unique root (if any) of the strictly monotone restriction of f to the
// ray from `start` in direction `dir`, found by doubling then bisection.
template <class Eq>
void tail_root(const Eq& eq, const BigInt& start, int dir, std::vector<BigInt>& out) {
    BigInt f0 = eq.eval(start);
    if (f0 == 0) {
        out.push_back(start);
        return;
    }
    const int s0 = sgn(f0);
    BigInt lo = start + dir;
    BigInt flo = eq.eval(lo);
    if (flo == 0) {
        out.push_back(lo);
        return;
    }
    if (sgn(flo) != s0) return;       // root strictly inside a unit gap
    if (sgn(flo - f0) == s0) return;  // moving away from zero

    BigInt hi = lo, fhi = flo, step = 1;
    while (sgn(fhi) == s0) {
        lo = hi;
        hi += dir * step;
        step *= 2;
        fhi = eq.eval(hi);
    }
    if (fhi == 0) {
        out.push_back(hi);
        return;
    }
    // strict sign change between lo and hi
    while ((dir > 0 ? hi - lo : lo - hi) > 1) {
        BigInt mid = (lo + hi) / 2;
        BigInt fm = eq.eval(mid);
        if (fm == 0) {
            out.push_back(mid);
            return;
        }
        (sgn(fm) == s0 ? lo : hi) = mid;
    }
}

template <class Eq>
std::vector<BigInt> solve_structured(const Eq& eq) {
    const auto& primes = sieve_primes();

    // Residue sieve: a genuine integer root survives every modulus, so one
    // empty residue set settles the instance.
    struct PrimeRoots {
        u64 p;
        std::vector<u64> roots;
    };
    std::vector<PrimeRoots> sieved;
    const size_t kSievePrimes = 24;
    for (size_t i = 0; i < kSievePrimes; ++i) {
        u64 p = primes[i];
        PrimeRoots pr{p, {}};
        for (u64 x = 0; x < p; ++x)
            if (eq.eval_mod(x, p) == 0) pr.roots.push_back(x);
        if (pr.roots.empty()) return {};
        sieved.push_back(std::move(pr));
    }

    BigInt bound = eq.crit_bound();
    std::vector<BigInt> roots;

    // Middle range [-bound, bound]: combine residue sets by CRT until the
    // modulus exceeds the range, then confirm each candidate exactly.
    std::sort(sieved.begin(), sieved.end(),
              [](const PrimeRoots& a, const PrimeRoots& b) { return a.roots.size() < b.roots.size(); });
    BigInt modulus = 1;
    std::vector<BigInt> residues = {0};
    size_t used = 0;
    while (modulus <= 2 * bound) {
        if (used >= sieved.size()) {
            // extend with further primes beyond the sieve set
            u64 p = 0;
            for (u64 cand : primes) {
                bool fresh = true;
                for (const auto& pr : sieved)
                    if (pr.p == cand) fresh = false;
                if (fresh) {
                    p = cand;
                    break;
                }
            }
            if (p == 0) throw std::runtime_error("descent roots: prime pool exhausted");
            PrimeRoots pr{p, {}};
            for (u64 x = 0; x < p; ++x)
                if (eq.eval_mod(x, p) == 0) pr.roots.push_back(x);
            if (pr.roots.empty()) return {};
            sieved.push_back(std::move(pr));
        }
        const PrimeRoots& pr = sieved[used++];
        std::vector<BigInt> next;
        next.reserve(residues.size() * pr.roots.size());
        BigInt new_modulus = modulus * static_cast<unsigned long>(pr.p);
        // x = a (mod modulus), x = b (mod p) -> x = a + modulus * k
        BigInt inv;
        BigInt mp = modulus % static_cast<unsigned long>(pr.p);
        if (mpz_invert(inv.get_mpz_t(), mp.get_mpz_t(), BigInt(static_cast<unsigned long>(pr.p)).get_mpz_t()) == 0)
            throw std::logic_error("descent roots: moduli not coprime");
        for (const BigInt& a : residues) {
            for (u64 b : pr.roots) {
                BigInt k = (static_cast<unsigned long>(b) - a) % static_cast<unsigned long>(pr.p) * inv %
                           static_cast<unsigned long>(pr.p);
                if (k < 0) k += static_cast<unsigned long>(pr.p);
                next.push_back(a + modulus * k);
            }
        }
        residues = std::move(next);
        modulus = new_modulus;
        if (residues.size() > 2000000)
            throw std::runtime_error("descent roots: residue explosion");
    }
    for (BigInt cand : residues) {
        if (cand > modulus / 2) cand -= modulus;  // centered representative
        BigInt acand = cand < 0 ? BigInt(-cand) : cand;
        if (acand > bound) continue;
        if (eq.eval(cand) == 0) roots.push_back(cand);
    }

    // Tails: strictly monotone beyond the critical bound, one root at most
    // on each side.
    tail_root(eq, bound + 1, +1, roots);
    tail_root(eq, -bound - 1, -1, roots);

    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<BigInt> imag_power_roots(long long D, const BigInt& v, int n, const BigInt& rhs) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("imag_power_roots: n must be odd, >= 3");
    if (v == 0) throw std::invalid_argument("imag_power_roots: v must be nonzero");
    if (D >= 0) throw std::invalid_argument("imag_power_roots: D must be negative");
    return solve_structured(ImagPowerEq{D, v, n, rhs});
}

std::vector<BigInt> d2_sum_roots(const BigInt& t, int sign, int n, const BigInt& rhs) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("d2_sum_roots: n must be odd, >= 3");
    if (sign != 1 && sign != -1) throw std::invalid_argument("d2_sum_roots: sign must be +-1");
    return solve_structured(D2SumEq{t, sign, n, rhs});
}

}  // namespace apsq::detail
