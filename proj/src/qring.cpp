#include "apsq/qring.hpp"

#include <cstdlib>
#include <sstream>

namespace apsq {

namespace {

bool squarefree_tag(long long D) {
    if (D == 0 || D == 1) return false;
    unsigned long long a = static_cast<unsigned long long>(D < 0 ? -D : D);
    for (unsigned long long k = 2; k * k <= a; ++k)
        if (a % (k * k) == 0) return false;
    return true;
}

}  // namespace

QuadInt::QuadInt(BigInt a_, BigInt b_, long long D_) : a(std::move(a_)), b(std::move(b_)), D(D_) {
    if (!squarefree_tag(D)) throw std::invalid_argument("QuadInt: D must be squarefree, not 0 or 1");
}

std::string QuadInt::str() const {
    std::ostringstream os;
    os << a;
    if (b >= 0) os << "+";
    os << b << "*sqrt(" << D << ")";
    return os.str();
}

QuadInt qmul(const QuadInt& x, const QuadInt& y) {
    if (x.D != y.D) throw std::invalid_argument("qmul: mismatched ring tags");
    return QuadInt(x.a * y.a + to_big(x.D) * x.b * y.b, x.a * y.b + x.b * y.a, x.D);
}

QuadInt qconj(const QuadInt& x) { return QuadInt(x.a, -x.b, x.D); }

BigInt qnorm(const QuadInt& x) { return x.a * x.a - to_big(x.D) * x.b * x.b; }

QuadInt qpow(const QuadInt& x, unsigned long n) {
    QuadInt acc(1, 0, x.D);
    QuadInt base = x;
    while (n > 0) {
        if (n & 1) acc = qmul(acc, base);
        n >>= 1;
        if (n > 0) base = qmul(base, base);
    }
    return acc;
}

}  // namespace apsq
