#pragma once

#include "apsq/solution.hpp"

namespace apsq {

/// Brute-force ground truth: for each n in n_set and 1 <= y <= y_max,
/// solve the defining equation as a quadratic in x by an exact
/// discriminant square test; emits primitive solutions only.
std::vector<Solution> oracle_enumerate(int d, long long r, const std::vector<int>& n_set,
                                       long long y_max);

}  // namespace apsq
