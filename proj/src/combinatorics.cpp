#include "peterson/combinatorics.hpp"

#include <stdexcept>

namespace peterson {

BigInt factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r = 1;
    for (long i = 2; i <= k; ++i) r *= i;
    return r;
}

BigInt factorial_ratio(long a, long b) {
    if (b < 0 || a < b) throw std::invalid_argument("factorial_ratio requires a >= b >= 0");
    BigInt r = 1;
    for (long i = b + 1; i <= a; ++i) r *= i;
    return r;
}

BigInt binomial(long a, long b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i; // divides exactly: r is binomial(a-b+i, i) here
    }
    return r;
}

BigInt multinomial(long n, std::initializer_list<long> parts) {
    if (n < 0) return 0;
    BigInt r = 1;
    long rest = n;
    for (long k : parts) {
        if (k < 0 || k > rest) return 0;
        r *= binomial(rest, k);
        rest -= k;
    }
    return r;
}

} // namespace peterson
