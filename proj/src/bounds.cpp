#include "matchex/bounds.hpp"

#include <stdexcept>

namespace matchex {

BigInt rational_ceil(const Rational& q) {
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q); // positive by canonicalization
    BigInt quot = num / den;                            // truncates toward zero
    if (num > 0 && quot * den != num) ++quot;
    return quot;
}

Rational jonsson_epsilon(int d, int r) {
    if (d < 2) throw std::invalid_argument("epsilon needs d >= 2");
    if (r < d + 1 || r > 2 * d + 4)
        throw std::invalid_argument("epsilon needs d+1 <= r <= 2d+4");
    int offset;
    if (r == d + 1)
        offset = 1;
    else if (r <= d + 3)
        offset = 2;
    else if (r <= 2 * d + 3)
        offset = 3;
    else
        offset = 4;
    return Rational(3 * r, d + 4) - offset;
}

ConnectivityBound jonsson_nu(int n, int d) {
    if (d < 2) throw std::invalid_argument("nu needs d >= 2");
    if (n < d + 1) throw std::invalid_argument("nu needs n >= d+1");
    // The window d+1 <= r <= 2d+4 has width d+4, so the residue of n is
    // realized exactly once.
    const int mod = d + 4;
    int r = n % mod;
    while (r < d + 1) r += mod;
    if (r > 2 * d + 4 || (n - r) % mod != 0 || n < r)
        throw std::invalid_argument("no valid (k, r) decomposition");
    ConnectivityBound b;
    b.n = n;
    b.d = d;
    b.r = r;
    b.k = (n - r) / mod;
    b.epsilon = jonsson_epsilon(d, r);
    b.nu = Rational(static_cast<long long>(d) * d + 3 * d - 1, 2 * mod) * n - b.epsilon / 2 - 1;
    b.shifted_bound = rational_ceil(b.nu);
    return b;
}

} // namespace matchex
