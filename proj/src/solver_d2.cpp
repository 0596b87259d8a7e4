#include "apsq/solver_d2.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "descent_roots.hpp"
#include "solver_d2_detail.hpp"

namespace apsq {

namespace {

using i64 = std::int64_t;

IntPoly pmul(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (size_t i = 0; i < a.coeffs.size(); ++i)
        for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    return IntPoly(std::move(c));
}

IntPoly padd(const IntPoly& a, const IntPoly& b, int bsign) {
    std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
    for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += bsign * b.coeffs[i];
    return IntPoly(std::move(c));
}

// (re + i*im)^n as a pair of polynomials in v.
std::pair<IntPoly, IntPoly> complex_poly_pow(const IntPoly& re, const IntPoly& im, int n) {
    IntPoly acc_re(std::vector<BigInt>{1}), acc_im;
    for (int i = 0; i < n; ++i) {
        IntPoly nre = padd(pmul(acc_re, re), pmul(acc_im, im), -1);
        IntPoly nim = padd(pmul(acc_re, im), pmul(acc_im, re), +1);
        acc_re = std::move(nre);
        acc_im = std::move(nim);
    }
    return {acc_re, acc_im};
}

}  // namespace

BigInt ThueForm::eval(const BigInt& u, const BigInt& v) const {
    BigInt acc = 0;
    BigInt upow = 1;
    for (int k = 4; k >= 0; --k) {
        BigInt vpow;
        mpz_pow_ui(vpow.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned>(4 - k));
        BigInt upw;
        mpz_pow_ui(upw.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned>(k));
        acc += coefficients[4 - k] * upw * vpow;
    }
    return acc;
}

std::pair<ThueForm, ThueForm> thue_forms(long long r) {
    if (r < 1) throw std::invalid_argument("thue_forms: r must be positive");
    ThueForm f1{{1, -4, -6, 4, 1}, to_big(r)};
    ThueForm f2{{1, 4, -6, -4, 1}, to_big(r)};
    return {f1, f2};
}

QuadInt pell_representation(long long q) {
    if (q < 2 || !is_prime(to_big(q)))
        throw std::invalid_argument("pell_representation: q must be prime");
    long long m = q % 8;
    if (m != 1 && m != 7)
        throw std::invalid_argument("pell_representation: q must be +-1 (mod 8)");
    const BigInt Q = to_big(q);
    for (BigInt b = 0; b <= Q; ++b) {
        BigInt t = Q + 2 * b * b;
        auto [s, exact] = isqrt(t);
        if (exact) return QuadInt(s, b, 2);
        t = 2 * b * b - Q;
        if (t >= 0) {
            auto [s2, exact2] = isqrt(t);
            if (exact2 && s2 > 0) return QuadInt(s2, b, 2);
        }
    }
    throw std::logic_error("pell_representation: search exhausted");
}

Verdict solve_n2(long long r) {
    if (r < 1) throw std::invalid_argument("solve_n2: r must be positive");
    if (r % 2 == 0)
        return Verdict{VerdictKind::NoSolutions, kTagD2N2Residue, "r is even", {}, nullptr};
    auto fac = factorize(to_big(r));
    for (const auto& [q, e] : fac.factors) {
        (void)e;
        long long qm = BigInt(q % 8).get_si();
        if (qm == 3 || qm == 5) {
            std::ostringstream os;
            os << "prime " << q << " ≡ ±3 (mod 8) divides r";
            return Verdict{VerdictKind::NoSolutions, kTagD2N2Residue, os.str(), {}, nullptr};
        }
    }
    auto fam = std::make_shared<PellFamily>();
    fam->r = r;
    for (const auto& [q, e] : fac.factors)
        fam->prime_reps.push_back({q.get_si(), pell_representation(q.get_si()), e});
    fam->description =
        "2x+3r + y*sqrt(2) = +-R^2 * (1+sqrt(2))^(2k+1), k in Z, "
        "R a product of one conjugate choice per prime of r";
    return Verdict{VerdictKind::Family, "pell-family", fam->description, {}, fam};
}

Solution pell_member(const PellFamily& fam, unsigned conj_mask, int sign, long long k) {
    QuadInt acc(1, 0, 2);
    for (size_t i = 0; i < fam.prime_reps.size(); ++i) {
        QuadInt rep = (conj_mask >> i) & 1 ? qconj(fam.prime_reps[i].rep) : fam.prime_reps[i].rep;
        acc = qmul(acc, qpow(rep, fam.prime_reps[i].mult));
    }
    acc = qmul(acc, acc);  // R^2
    long long m = 2 * k + 1;
    QuadInt unit =
        m >= 0 ? qpow(QuadInt(1, 1, 2), static_cast<unsigned long>(m))
               : qpow(QuadInt(-1, 1, 2), static_cast<unsigned long>(-m));  // (1+sqrt2)^-1 = -1+sqrt2
    QuadInt mem = qmul(acc, unit);
    if (sign < 0) mem = QuadInt(-mem.a, -mem.b, 2);
    BigInt num = mem.a - 3 * to_big(fam.r);
    if (num % 2 != 0) throw std::logic_error("pell_member: parity violation");
    Solution s;
    s.d = 2;
    s.r = fam.r;
    s.x = num / 2;
    s.y = mem.b < 0 ? BigInt(-mem.b) : mem.b;
    s.n = 2;
    if (!verify_solution(s)) throw std::logic_error("pell_member: member fails the equation");
    return s;
}

std::vector<Solution> family_members(const PellFamily& fam, long long k_min, long long k_max) {
    std::vector<Solution> out;
    unsigned masks = 1u << fam.prime_reps.size();
    for (unsigned mask = 0; mask < masks; ++mask)
        for (int sign : {+1, -1})
            for (long long k = k_min; k <= k_max; ++k) out.push_back(pell_member(fam, mask, sign, k));
    sort_dedupe(out);
    return out;
}

namespace {

void n4_case1(long long r, const BigInt& u, const BigInt& v, int eps, std::vector<Solution>& out) {
    // x + 2r = eps (u^4 - 6 u^2 v^2 + v^4), x + r = eps 4(u^3 v - u v^3)
    BigInt g = u * u * u * u - 6 * u * u * v * v + v * v * v * v;
    Solution s;
    s.d = 2;
    s.r = r;
    s.x = eps * g - 2 * to_big(r);
    s.y = u * u + v * v;
    s.n = 4;
    s.witness = DescentWitness{-1, u, v, 0, eps > 0 ? "+1" : "-1", {}};
    if (verify_solution(s)) out.push_back(std::move(s));
}

void n4_case2(long long r, const BigInt& u, const BigInt& v, int eps, std::vector<Solution>& out) {
    // x + r = eps (u^4 - 6 u^2 v^2 + v^4), x + 2r = eps 4(u v^3 - u^3 v)
    BigInt g = u * u * u * u - 6 * u * u * v * v + v * v * v * v;
    Solution s;
    s.d = 2;
    s.r = r;
    s.x = eps * g - to_big(r);
    s.y = u * u + v * v;
    s.n = 4;
    s.witness = DescentWitness{-1, u, v, 0, eps > 0 ? "+i" : "-i", {}};
    if (verify_solution(s)) out.push_back(std::move(s));
}

bool coprime_odd(const BigInt& u, const BigInt& v) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    return g == 1 && mpz_odd_p(BigInt(u + v).get_mpz_t());
}

// On a quartic-form hit F1(u,v) = +-r: case 1 uses (u,v) directly; the
// second form satisfies F2(v,u) = F1(u,v), so the same hit seeds case 2
// with coordinates swapped.
void handle_hit(long long r, const BigInt& u, const BigInt& v, bool plus, std::vector<Solution>& out) {
    if (!coprime_odd(u, v)) return;
    n4_case1(r, u, v, plus ? +1 : -1, out);
    n4_case2(r, v, u, plus ? -1 : +1, out);
}

}  // namespace

namespace detail {

std::vector<Solution> solve_n4_bignum(long long r, long long search_bound) {
    std::vector<Solution> out;
    const BigInt R = to_big(r), SB = to_big(search_bound);
    for (BigInt v = 0; v <= SB; ++v) {
        const BigInt c1 = 4 * v, c2 = 6 * v * v, c3 = 4 * v * v * v;
        const BigInt v4 = v * v * v * v;
        BigInt u = (v == 0) ? BigInt(1) : BigInt(-SB);
        for (; u <= SB; ++u) {
            BigInt F = (((u - c1) * u - c2) * u + c3) * u + v4;
            if (F == R || F == -R) handle_hit(r, u, v, F == R, out);
        }
    }
    sort_dedupe(out);
    return out;
}

}  // namespace detail

std::vector<Solution> solve_n4(long long r, long long search_bound) {
    if (r < 1) throw std::invalid_argument("solve_n4: r must be positive");
    if (search_bound < 1) throw std::invalid_argument("solve_n4: bound must be positive");
    std::vector<Solution> out;
    if (r % 2 == 0) return out;  // even r cannot be primitive here

    if (search_bound > 20000) return detail::solve_n4_bignum(r, search_bound);

    // F1(u,v) = u^4 - 4u^3 v - 6u^2 v^2 + 4u v^3 + v^4, Horner in u.
    // Sign symmetry F1(-u,-v) = F1(u,v) lets v stay nonnegative.
    const i64 R = r, B = search_bound;
    for (i64 v = 0; v <= B; ++v) {
        const i64 c1 = 4 * v, c2 = 6 * v * v, c3 = 4 * v * v * v;
        const i64 v4 = v * v * v * v;
        const i64 u_lo = (v == 0) ? 1 : -B;
        for (i64 u = u_lo; u <= B; ++u) {
            i64 F = (((u - c1) * u - c2) * u + c3) * u + v4;
            if (F == R || F == -R) handle_hit(r, BigInt(u), BigInt(v), F == R, out);
        }
    }
    sort_dedupe(out);
    return out;
}

std::vector<Solution> solve_odd_prime(long long r, int n) {
    if (r < 1) throw std::invalid_argument("solve_odd_prime: r must be positive");
    if (n < 3 || n % 2 == 0 || !is_prime(BigInt(n)))
        throw std::invalid_argument("solve_odd_prime: n must be an odd prime");
    std::vector<Solution> out;
    if (r % 2 == 0) return out;  // even r cannot be primitive here

    const int sign = (n % 4 == 1) ? -1 : +1;  // u = t - v  or  u = t + v
    for (const BigInt& t : divisors(to_big(r), true)) {
        std::vector<BigInt> vroots;
        if (n <= 13) {
            IntPoly re(std::vector<BigInt>{t, BigInt(sign)});
            IntPoly im(std::vector<BigInt>{BigInt(0), BigInt(1)});
            auto [pre, pim] = complex_poly_pow(re, im, n);
            IntPoly f = padd(pre, pim, +1);
            if (f.coeffs.empty()) f.coeffs.emplace_back(0);
            f.coeffs[0] -= to_big(r);
            f.normalize();
            vroots = integer_roots(f);
        } else {
            vroots = detail::d2_sum_roots(t, sign, n, to_big(r));
        }
        for (const BigInt& v0 : vroots) {
            BigInt u0 = t + sign * v0;
            QuadInt p = qpow(QuadInt(u0, v0, -1), static_cast<unsigned long>(n));
            if (p.a + p.b != to_big(r)) continue;
            BigInt num = p.a - p.b - 3 * to_big(r);
            if (num % 2 != 0) continue;  // parity reject
            Solution s;
            s.d = 2;
            s.r = r;
            s.x = num / 2;
            s.y = u0 * u0 + v0 * v0;
            s.n = n;
            s.witness = DescentWitness{-1, u0, v0, t, sign < 0 ? "u=t-v" : "u=t+v", {}};
            if (verify_solution(s)) out.push_back(std::move(s));
        }
    }
    sort_dedupe(out);
    return out;
}

D2Bundle solve_all_d2(long long r, const D2Options& opts) {
    D2Bundle b;
    b.n2 = solve_n2(r);
    if (b.n2.family) b.n2_members = family_members(*b.n2.family, -opts.family_k, opts.family_k);
    b.n4 = solve_n4(r, opts.thue_bound);
    b.exponents = exponent_set_d2(r);
    for (long long p : b.exponents.primes)
        b.odd_prime[static_cast<int>(p)] = solve_odd_prime(r, static_cast<int>(p));
    std::vector<Solution> all = b.n4;
    for (const auto& [n, sols] : b.odd_prime) {
        (void)n;
        all.insert(all.end(), sols.begin(), sols.end());
    }
    all.insert(all.end(), b.n2_members.begin(), b.n2_members.end());
    b.lifts = power_lifts(all);
    return b;
}

}  // namespace apsq
