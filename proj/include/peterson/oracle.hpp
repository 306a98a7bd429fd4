#pragma once

#include "peterson/monomial.hpp"
#include "peterson/restriction.hpp"
#include "peterson/subset.hpp"

#include <utility>
#include <vector>

namespace peterson {

/// Weight contributed by one letter of a fixed-point word once every
/// simple root is specialized to t: a positive integer multiplier.
struct RootValue {
    int multiplier = 1;
};

/// Per-position weights for staircase_word(c): the letter j at any
/// position contributes j - lo + 1, where lo starts the run of c
/// containing j.
std::vector<RootValue> letter_weights(const IndexSet& c);

/// Restriction computed the slow, definition-driven way: a weighted count
/// of reduced subwords of staircase_word(c) multiplying to the increasing
/// product over a. Serves as the independent cross-check for
/// restriction(); the two must agree everywhere.
///
/// Cost grows as 2^|a| * |word|; throws std::invalid_argument when
/// |a| > 24 rather than silently eating memory.
Monomial subword_restriction(const IndexSet& a, const IndexSet& c);

/// Which restriction routine feeds the localization solver.
enum class RestrictionBackend { ClosedForm, Subword };

/// All nonzero restrictions of the class of a, keyed by fixed point,
/// sorted by (|C|, bitmask value).
struct RestrictionVector {
    IndexSet cls;
    std::vector<std::pair<IndexSet, Monomial>> values;
};

RestrictionVector restriction_vector(const IndexSet& a,
                                     RestrictionBackend backend = RestrictionBackend::ClosedForm);

/// Expands the product of the classes of a and b by solving the
/// triangular localization system over all fixed points containing
/// a ∪ b, smallest first. Keeps only nonzero coefficients, sorted by
/// (|C|, bitmask value). Division must always be exact; any remainder,
/// sign, or degree inconsistency throws std::runtime_error naming the
/// offending triple.
std::vector<std::pair<IndexSet, Monomial>>
localize_product(const IndexSet& a, const IndexSet& b,
                 RestrictionBackend backend = RestrictionBackend::ClosedForm);

} // namespace peterson
