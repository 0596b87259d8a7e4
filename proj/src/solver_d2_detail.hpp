#pragma once

#include "apsq/solver_d2.hpp"

namespace apsq::detail {

/// Bignum fallback of the quartic-form scan, same contract as solve_n4.
/// The public entry picks it automatically above the word-size bound;
/// exposed so tests can drive it over small ranges.
std::vector<Solution> solve_n4_bignum(long long r, long long search_bound);

}  // namespace apsq::detail
