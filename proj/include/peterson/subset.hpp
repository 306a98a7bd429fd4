#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace peterson {

/// A maximal run of consecutive indices [lo, hi], 1-based, lo <= hi.
struct Interval {
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo + 1; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool operator==(const Interval&) const = default;
    auto operator<=>(const Interval&) const = default;
};

/// A word in the simple transposition alphabet, letters in {1, ..., n-1}.
using Word = std::vector<int>;

/// A subset of {1, ..., n-1} for a fixed rank n, stored as a bitmask
/// (bit i set means i is a member, so ranks up to 64 fit in one word).
class IndexSet {
public:
    IndexSet() = default;
    explicit IndexSet(unsigned n);
    IndexSet(unsigned n, std::initializer_list<int> members);

    static IndexSet from_bits(unsigned n, std::uint64_t bits);
    static IndexSet interval(unsigned n, int lo, int hi);
    static IndexSet interval(unsigned n, const Interval& b) { return interval(n, b.lo, b.hi); }

    /// Parses "1,2,4-5" style text; ranges are inclusive, the empty string
    /// denotes the empty set. Throws std::invalid_argument on junk or on
    /// members outside {1, ..., n-1}.
    static IndexSet parse(unsigned n, std::string_view text);

    unsigned rank() const { return n_; }
    std::uint64_t bits() const { return bits_; }

    /// Same members, new ambient rank. Throws if a member no longer fits.
    IndexSet with_rank(unsigned n) const { return from_bits(n, bits_); }

    bool empty() const { return bits_ == 0; }
    int size() const;
    bool contains(int i) const;
    bool subset_of(const IndexSet& other) const;

    IndexSet operator|(const IndexSet& o) const;
    IndexSet operator&(const IndexSet& o) const;
    /// Members of *this not in o.
    IndexSet operator-(const IndexSet& o) const;

    /// Smallest member; requires nonempty.
    int tail() const;
    /// Largest member; requires nonempty.
    int head() const;

    /// True when the members form a single gap-free run. Empty sets are
    /// not consecutive under this definition.
    bool is_consecutive() const;

    /// Maximal consecutive runs in increasing order; empty list for the
    /// empty set.
    std::vector<Interval> blocks() const;

    std::vector<int> members() const;

    /// Canonical form: "1,2,5" ("" for the empty set). parse() inverts it.
    std::string str() const;

    bool operator==(const IndexSet& o) const { return n_ == o.n_ && bits_ == o.bits_; }
    auto operator<=>(const IndexSet& o) const {
        if (auto c = n_ <=> o.n_; c != 0) return c;
        return bits_ <=> o.bits_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t n_ = 1;

    void check_member(int i) const;
};

/// Reduced word used for the fixed-point permutation of a: per maximal run
/// [lo, hi] the rows (lo ... hi), (lo ... hi-1), ..., (lo), concatenated
/// over runs in increasing order.
Word staircase_word(const Interval& block);
Word staircase_word(const IndexSet& a);

/// The members of a in increasing order, as a word.
Word increasing_word(const IndexSet& a);

/// Every subset of {1, ..., n-1} containing base (n = base's rank),
/// sorted by (size, bitmask value).
std::vector<IndexSet> supersets(const IndexSet& base);

} // namespace peterson
