#pragma once

#include <string>

#include "apsq/numutil.hpp"

namespace apsq {

/// Element a + b*sqrt(D) of the quadratic ring Z[sqrt(D)], D squarefree,
/// D != 0, 1. Values with different D tags never combine.
struct QuadInt {
    BigInt a;
    BigInt b;
    long long D;

    QuadInt(BigInt a_, BigInt b_, long long D_);

    bool operator==(const QuadInt& o) const { return a == o.a && b == o.b && D == o.D; }
    std::string str() const;
};

QuadInt qmul(const QuadInt& x, const QuadInt& y);
QuadInt qconj(const QuadInt& x);
BigInt qnorm(const QuadInt& x);
QuadInt qpow(const QuadInt& x, unsigned long n);

}  // namespace apsq
