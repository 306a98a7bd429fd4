#pragma once

#include "peterson/monomial.hpp"
#include "peterson/subset.hpp"

namespace peterson {

/// Restriction of the class of a single run a to the fixed point of a
/// single run d, via the closed product formula. Requires a inside d;
/// throws std::invalid_argument otherwise. The result is a positive
/// multiple of t^|a|.
Monomial block_restriction(const Interval& a, const Interval& d);

/// Restriction of the class of a to the fixed point of c, for arbitrary
/// subsets. Zero unless a is contained in c; otherwise the product of the
/// run restrictions, each taken inside the run of c that carries it.
Monomial restriction(const IndexSet& a, const IndexSet& c);

/// Restriction of the class of a to its own fixed point:
/// the product of |a_i|! t^|a_i| over the maximal runs a_i. Never zero.
Monomial self_restriction(const IndexSet& a);

} // namespace peterson
