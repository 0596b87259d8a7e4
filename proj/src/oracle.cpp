#include "apsq/oracle.hpp"

#include <array>

namespace apsq {

namespace {

// Quick quadratic-residue rejection before the exact square test.
template <int M>
std::array<bool, M> square_table() {
    std::array<bool, M> t{};
    for (int i = 0; i < M; ++i) t[i * i % M] = true;
    return t;
}

bool maybe_square(const BigInt& x) {
    static const auto t64 = square_table<64>();
    static const auto t63 = square_table<63>();
    static const auto t65 = square_table<65>();
    static const auto t11 = square_table<11>();
    return t64[mpz_fdiv_ui(x.get_mpz_t(), 64)] && t63[mpz_fdiv_ui(x.get_mpz_t(), 63)] &&
           t65[mpz_fdiv_ui(x.get_mpz_t(), 65)] && t11[mpz_fdiv_ui(x.get_mpz_t(), 11)];
}

}  // namespace

std::vector<Solution> oracle_enumerate(int d, long long r, const std::vector<int>& n_set,
                                       long long y_max) {
    if (d < 2 || d > 10) throw std::invalid_argument("oracle_enumerate: d must be in [2, 10]");
    if (r < 1) throw std::invalid_argument("oracle_enumerate: r must be positive");
    if (y_max < 1) throw std::invalid_argument("oracle_enumerate: y_max must be positive");

    const BigInt cd = BigInt(d) * (d + 1) * (2 * d + 1) / 6;
    const BigInt lin = BigInt(d) * (d + 1) * to_big(r);
    const BigInt base = lin * lin - 4 * d * cd * to_big(r) * to_big(r);  // discriminant minus the y part
    std::vector<Solution> out;
    for (int n : n_set) {
        if (n < 2) throw std::invalid_argument("oracle_enumerate: exponents must be >= 2");
        for (long long y = 1; y <= y_max; ++y) {
            BigInt yn;
            mpz_ui_pow_ui(yn.get_mpz_t(), static_cast<unsigned long>(y), n);
            BigInt disc = base + 4 * d * yn;
            if (disc < 0 || !maybe_square(disc)) continue;
            auto [s, exact] = isqrt(disc);
            if (!exact) continue;
            for (int pm : {+1, -1}) {
                BigInt num = -lin + pm * s;
                if (num % (2 * d) != 0) continue;
                Solution cand;
                cand.d = d;
                cand.r = r;
                cand.x = num / (2 * d);
                cand.y = to_big(y);
                cand.n = n;
                if (verify_solution(cand)) out.push_back(std::move(cand));
                if (s == 0) break;
            }
        }
    }
    sort_dedupe(out);
    return out;
}

}  // namespace apsq
