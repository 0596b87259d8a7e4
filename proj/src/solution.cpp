#include "apsq/solution.hpp"

#include <algorithm>

namespace apsq {

void sort_dedupe(std::vector<Solution>& sols) {
    std::sort(sols.begin(), sols.end());
    sols.erase(std::unique(sols.begin(), sols.end()), sols.end());
}

std::vector<Solution> power_lifts(const std::vector<Solution>& sols) {
    std::vector<Solution> lifts;
    for (const auto& s : sols) {
        if (s.y <= 1) continue;  // y = 1 stays trivial at every exponent
        auto [base, e] = perfect_power(s.y);
        if (e < 2) continue;
        for (unsigned m = 2; m <= e; ++m) {
            if (e % m != 0) continue;
            BigInt yl;
            mpz_pow_ui(yl.get_mpz_t(), base.get_mpz_t(), e / m);
            Solution t{s.d, s.r, s.x, yl, static_cast<int>(m) * s.n, s.witness};
            lifts.push_back(std::move(t));
        }
    }
    sort_dedupe(lifts);
    return lifts;
}

}  // namespace apsq
