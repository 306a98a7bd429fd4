#pragma once

#include "peterson/combinatorics.hpp"

#include <string>

namespace peterson {

/// A single term c * t^d with c a nonnegative exact integer and d >= 0.
/// Every quantity the calculator produces is of this shape, so sums only
/// ever combine equal powers; mixing distinct nonzero powers is a logic
/// error and throws. The zero monomial is canonical: coeff 0, power 0.
struct Monomial {
    BigInt coeff = 0;
    int power = 0;

    Monomial() = default;
    Monomial(BigInt c, int d);

    static Monomial zero() { return {}; }
    static Monomial one() { return {1, 0}; }

    bool is_zero() const { return coeff == 0; }

    Monomial& operator+=(const Monomial& o);
    Monomial operator+(const Monomial& o) const;
    /// Subtraction of a smaller same-power term; throws if the result
    /// would be negative (callers rely on this as a consistency check).
    Monomial operator-(const Monomial& o) const;
    Monomial operator*(const Monomial& o) const;
    Monomial& operator*=(const Monomial& o);

    /// Exact division; throws std::domain_error on a nonzero remainder,
    /// a power underflow, or a zero divisor.
    Monomial exact_div(const Monomial& d) const;

    bool operator==(const Monomial& o) const = default;

    /// "0", "7", or "12*t^2".
    std::string str() const;
};

} // namespace peterson
