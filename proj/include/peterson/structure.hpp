#pragma once

#include "peterson/monomial.hpp"
#include "peterson/subset.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace peterson {

/// One row of a product expansion: the coefficient of the class of c.
using ExpansionRow = std::pair<IndexSet, Monomial>;

/// Product expansion of two classes: every nonzero coefficient, rows
/// sorted by (|c|, bitmask value). Row keys always satisfy
/// a ∪ b ⊆ c and |c| <= |a| + |b|.
struct Expansion {
    IndexSet a, b;
    std::vector<ExpansionRow> rows;
};

/// Computes structure constants of the Peterson Schubert basis through
/// the closed combinatorial formulas. Results are exact monomials in t.
///
/// Instances memoize aggressively and are not thread safe; concurrent
/// callers should each own one (the tables are small).
class StructureConstants {
public:
    /// Closed form for three single runs. Zero unless c contains a and b
    /// and |c| <= |a| + |b|; otherwise a nonnegative multiple of t^d with
    /// d = |a| + |b| - |c|.
    static Monomial consecutive_coefficient(const Interval& a, const Interval& b,
                                            const Interval& c);

    /// Coefficient when a ∪ b is one run (a, b themselves arbitrary
    /// nonempty subsets) and the target c is one run. Throws
    /// std::invalid_argument if a or b is empty or a ∪ b has gaps.
    Monomial union_consecutive_coefficient(const IndexSet& a, const IndexSet& b,
                                           const Interval& c);

    /// Coefficient for one-run targets c and arbitrary nonempty a, b.
    /// Throws std::invalid_argument if a or b is empty.
    Monomial block_coefficient(const IndexSet& a, const IndexSet& b, const Interval& c);

    /// Fully general coefficient. Empty operands follow the unit rules
    /// (the empty class is the identity); otherwise the product over the
    /// runs of c.
    Monomial coefficient(const IndexSet& a, const IndexSet& b, const IndexSet& c);

    /// Exact predicate for coefficient(a, b, c) != 0, evaluated without
    /// computing the coefficient: a ∪ b ⊆ c and no run of c is longer
    /// than its overlaps with a and b combined.
    static bool nonvanishing(const IndexSet& a, const IndexSet& b, const IndexSet& c);

    /// All nonzero coefficients of the product of the classes of a and b
    /// over the targets inside {1, ..., n-1}, n the larger rank.
    Expansion expand(const IndexSet& a, const IndexSet& b);

    /// Coefficient with t specialized to 0, nonzero only in top degree
    /// |c| = |a| + |b|.
    BigInt ordinary(const IndexSet& a, const IndexSet& b, const IndexSet& c);

    /// Snapshot of the memo table, for reuse across runs. The format is
    /// versioned; load_cache rejects files it does not understand and
    /// returns the number of entries read. save_cache overwrites.
    size_t load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

private:
    struct TripleKey {
        std::uint64_t a, b, c;
        auto operator<=>(const TripleKey&) const = default;
    };

    Monomial multi_block_coefficient(std::vector<Interval> parts, const Interval& target);

    std::map<TripleKey, Monomial> general_memo_;
    std::map<TripleKey, Monomial> block_memo_; // c packed as lo | hi << 8
    std::map<std::string, Monomial> multi_memo_;
};

} // namespace peterson
