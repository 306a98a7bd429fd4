#include "peterson/restriction.hpp"

#include <stdexcept>

namespace peterson {

Monomial block_restriction(const Interval& a, const Interval& d) {
    if (!d.contains(a))
        throw std::invalid_argument("block_restriction needs [" + std::to_string(a.lo) + "," +
                                    std::to_string(a.hi) + "] inside [" + std::to_string(d.lo) +
                                    "," + std::to_string(d.hi) + "]");
    BigInt c = binomial(d.hi - a.lo + 1, a.size());
    c *= factorial_ratio(a.hi - d.lo + 1, a.lo - d.lo);
    return Monomial{std::move(c), a.size()};
}

Monomial restriction(const IndexSet& a, const IndexSet& c) {
    if (!a.subset_of(c)) return Monomial::zero();
    Monomial r = Monomial::one();
    auto runs_c = c.blocks();
    for (const Interval& run_a : a.blocks()) {
        for (const Interval& run_c : runs_c) {
            if (run_c.contains(run_a)) {
                r *= block_restriction(run_a, run_c);
                break;
            }
        }
    }
    return r;
}

Monomial self_restriction(const IndexSet& a) {
    Monomial r = Monomial::one();
    for (const Interval& run : a.blocks())
        r *= Monomial{factorial(run.size()), run.size()};
    return r;
}

} // namespace peterson
