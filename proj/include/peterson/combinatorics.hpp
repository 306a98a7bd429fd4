#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>

namespace peterson {

using BigInt = boost::multiprecision::cpp_int;

/// k! for k >= 0; throws std::invalid_argument for k < 0.
BigInt factorial(long k);

/// a!/b! for a >= b >= 0, computed as the product (b+1)(b+2)...a.
BigInt factorial_ratio(long a, long b);

/// Binomial coefficient with the usual vanishing convention:
/// 0 whenever b < 0 or b > a (this covers a < 0 as well).
BigInt binomial(long a, long b);

/// Multinomial coefficient n! / (k_1! ... k_r! (n - sum k_i)!).
/// Returns 0 if n < 0, any k_i < 0, or sum k_i > n.
BigInt multinomial(long n, std::initializer_list<long> parts);

} // namespace peterson
