#pragma once

#include <cstdint>
#include <vector>

#include "apsq/numutil.hpp"

namespace apsq::detail {

/// All integers u with Im-coefficient of (u + v*sqrt(D))^n equal to rhs,
/// for odd n >= 3, v != 0, D < 0 squarefree. Exact; no root is missed.
std::vector<BigInt> imag_power_roots(long long D, const BigInt& v, int n, const BigInt& rhs);

/// All integers v such that, with u = t + sign*v and alpha = u + i v,
/// Re(alpha^n) + Im(alpha^n) equals rhs, for odd n >= 3, sign in {-1, +1}.
std::vector<BigInt> d2_sum_roots(const BigInt& t, int sign, int n, const BigInt& rhs);

}  // namespace apsq::detail
