#include "apsq/sieve.hpp"

#include <sstream>

namespace apsq {

const char* verdict_kind_name(VerdictKind k) {
    switch (k) {
        case VerdictKind::Eliminated: return "Eliminated";
        case VerdictKind::NoSolutions: return "NoSolutions";
        case VerdictKind::Family: return "Family";
        case VerdictKind::Finite: return "Finite";
        case VerdictKind::Open: return "Open";
        case VerdictKind::Unsupported: return "Unsupported";
        case VerdictKind::Deferred: return "Deferred";
    }
    return "?";
}

namespace {

unsigned ord(int d, int p) {
    unsigned e = 0;
    while (d % p == 0) {
        d /= p;
        ++e;
    }
    return e;
}

Verdict eliminated(const char* tag, std::string detail) {
    return Verdict{VerdictKind::Eliminated, tag, std::move(detail), {}, nullptr};
}

}  // namespace

Verdict classify(int d, int n) {
    if (n < 2) throw std::invalid_argument("classify: exponent must be >= 2");
    if (d < 2 || d > 10)
        return Verdict{VerdictKind::Unsupported, "d-range",
                       "only 2 <= d <= 10 is supported", {}, nullptr};

    // 2-adic valuation obstruction: j = ord_2(d) >= 2 forces n | (j-1).
    unsigned j2 = ord(d, 2);
    if (j2 >= 2 && (j2 - 1) % n != 0) {
        std::ostringstream os;
        os << "ord_2(d)=" << j2 << " forces n | " << (j2 - 1);
        return eliminated(kTagLemma21, os.str());
    }
    // Same shape at the prime 3.
    unsigned j3 = ord(d, 3);
    if (j3 >= 2 && (j3 - 1) % n != 0) {
        std::ostringstream os;
        os << "ord_3(d)=" << j3 << " forces n | " << (j3 - 1);
        return eliminated(kTagLemma22, os.str());
    }
    // Primes q = +-5 (mod 12) dividing d with ord_q(d) not a multiple of n;
    // for d <= 10 the candidates are exactly 5 and 7.
    for (int q : {5, 7}) {
        if (d % q != 0) continue;
        unsigned jq = ord(d, q);
        if (jq % n != 0) {
            std::ostringstream os;
            os << "q=" << q << " ≡ ±5 (mod 12), ord_q(d)=" << jq;
            return eliminated(kTagLemma23, os.str());
        }
    }
    // Even exponents reduce to squares, so the n=2 obstructions for
    // d = 6, 8 cover every even n that survived the valuation lemmas.
    if (d == 6 && n % 2 == 0)
        return Verdict{VerdictKind::NoSolutions, kTagD6Mod7,
                       "6 is a non-square modulo 7", {}, nullptr};
    if (d == 8 && n % 2 == 0)
        return Verdict{VerdictKind::NoSolutions, kTagD8Mod3,
                       "2 is a non-square modulo 3", {}, nullptr};
    if (d == 3)
        return Verdict{VerdictKind::Deferred, "d3-external",
                       "d=3 is resolved elsewhere", {}, nullptr};
    return Verdict{VerdictKind::Open, "descent", "", {}, nullptr};
}

}  // namespace apsq
