#include "peterson/monomial.hpp"

#include <stdexcept>

namespace peterson {

Monomial::Monomial(BigInt c, int d) : coeff(std::move(c)), power(d) {
    if (coeff < 0) throw std::domain_error("monomial coefficient must be nonnegative");
    if (power < 0) throw std::domain_error("monomial power must be nonnegative");
    if (coeff == 0) power = 0;
}

Monomial& Monomial::operator+=(const Monomial& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    if (power != o.power)
        throw std::logic_error("monomial sum with mismatched powers t^" +
                               std::to_string(power) + " vs t^" + std::to_string(o.power));
    coeff += o.coeff;
    return *this;
}

Monomial Monomial::operator+(const Monomial& o) const {
    Monomial r = *this;
    r += o;
    return r;
}

Monomial Monomial::operator-(const Monomial& o) const {
    if (o.is_zero()) return *this;
    if (is_zero() || power != o.power || coeff < o.coeff)
        throw std::logic_error("monomial difference would be negative or mix powers");
    Monomial r;
    r.coeff = coeff - o.coeff;
    r.power = r.coeff == 0 ? 0 : power;
    return r;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (is_zero() || o.is_zero()) return zero();
    Monomial r;
    r.coeff = coeff * o.coeff;
    r.power = power + o.power;
    return r;
}

Monomial& Monomial::operator*=(const Monomial& o) {
    *this = *this * o;
    return *this;
}

Monomial Monomial::exact_div(const Monomial& d) const {
    if (d.is_zero()) throw std::domain_error("monomial division by zero");
    if (is_zero()) return zero();
    if (power < d.power)
        throw std::domain_error("monomial division underflows the power of t");
    BigInt q = coeff / d.coeff;
    BigInt rem = coeff - q * d.coeff;
    if (rem != 0)
        throw std::domain_error("monomial division leaves remainder " + rem.str() + " over " +
                                d.coeff.str());
    return Monomial{q, power - d.power};
}

std::string Monomial::str() const {
    if (is_zero()) return "0";
    if (power == 0) return coeff.str();
    return coeff.str() + "*t^" + std::to_string(power);
}

} // namespace peterson
