#include "peterson/subset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace peterson {

namespace {

void check_rank(unsigned n) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("rank must lie in [1, 64], got " + std::to_string(n));
}

int parse_int(std::string_view text, size_t& pos) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos)
        throw std::invalid_argument("expected a number in subset '" + std::string(text) + "'");
    pos = static_cast<size_t>(ptr - text.data());
    return value;
}

} // namespace

IndexSet::IndexSet(unsigned n) : n_(static_cast<std::uint8_t>(n)) {
    check_rank(n);
}

IndexSet::IndexSet(unsigned n, std::initializer_list<int> members) : IndexSet(n) {
    for (int i : members) {
        check_member(i);
        bits_ |= std::uint64_t{1} << i;
    }
}

void IndexSet::check_member(int i) const {
    if (i < 1 || i >= static_cast<int>(n_))
        throw std::invalid_argument("index " + std::to_string(i) + " out of range for rank " +
                                    std::to_string(n_));
}

IndexSet IndexSet::from_bits(unsigned n, std::uint64_t bits) {
    IndexSet s(n);
    std::uint64_t allowed = n >= 2 ? ((~std::uint64_t{0}) >> (64 - (n - 1))) << 1 : 0;
    if (bits & ~allowed)
        throw std::invalid_argument("bitmask has members outside {1, ..., n-1}");
    s.bits_ = bits;
    return s;
}

IndexSet IndexSet::interval(unsigned n, int lo, int hi) {
    IndexSet s(n);
    if (lo > hi) throw std::invalid_argument("interval with lo > hi");
    s.check_member(lo);
    s.check_member(hi);
    for (int i = lo; i <= hi; ++i) s.bits_ |= std::uint64_t{1} << i;
    return s;
}

IndexSet IndexSet::parse(unsigned n, std::string_view text) {
    IndexSet s(n);
    size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) return s;
    for (;;) {
        int lo = parse_int(text, pos);
        int hi = lo;
        if (pos < text.size() && text[pos] == '-') {
            ++pos;
            hi = parse_int(text, pos);
        }
        if (lo > hi)
            throw std::invalid_argument("descending range in subset '" + std::string(text) + "'");
        s.check_member(lo);
        s.check_member(hi);
        for (int i = lo; i <= hi; ++i) s.bits_ |= std::uint64_t{1} << i;
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw std::invalid_argument("unexpected character '" + std::string(1, text[pos]) +
                                        "' in subset '" + std::string(text) + "'");
        ++pos;
    }
    return s;
}

int IndexSet::size() const { return std::popcount(bits_); }

bool IndexSet::contains(int i) const {
    return i >= 1 && i < static_cast<int>(n_) && (bits_ >> i & 1);
}

bool IndexSet::subset_of(const IndexSet& other) const { return (bits_ & ~other.bits_) == 0; }

IndexSet IndexSet::operator|(const IndexSet& o) const {
    IndexSet r(std::max<unsigned>(n_, o.n_));
    r.bits_ = bits_ | o.bits_;
    return r;
}

IndexSet IndexSet::operator&(const IndexSet& o) const {
    IndexSet r(std::max<unsigned>(n_, o.n_));
    r.bits_ = bits_ & o.bits_;
    return r;
}

IndexSet IndexSet::operator-(const IndexSet& o) const {
    IndexSet r(n_);
    r.bits_ = bits_ & ~o.bits_;
    return r;
}

int IndexSet::tail() const {
    if (empty()) throw std::logic_error("tail of the empty set");
    return std::countr_zero(bits_);
}

int IndexSet::head() const {
    if (empty()) throw std::logic_error("head of the empty set");
    return 63 - std::countl_zero(bits_);
}

bool IndexSet::is_consecutive() const {
    if (empty()) return false;
    return size() == head() - tail() + 1;
}

std::vector<Interval> IndexSet::blocks() const {
    std::vector<Interval> out;
    std::uint64_t rest = bits_;
    while (rest) {
        int lo = std::countr_zero(rest);
        int hi = lo;
        while (rest >> (hi + 1) & 1) ++hi;
        out.push_back({lo, hi});
        rest &= ~(((std::uint64_t{2} << hi) - 1));
    }
    return out;
}

std::vector<int> IndexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for (std::uint64_t rest = bits_; rest; rest &= rest - 1)
        out.push_back(std::countr_zero(rest));
    return out;
}

std::string IndexSet::str() const {
    std::string out;
    for (int i : members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(i);
    }
    return out;
}

Word staircase_word(const Interval& block) {
    Word w;
    w.reserve(static_cast<size_t>(block.size()) * (block.size() + 1) / 2);
    for (int top = block.hi; top >= block.lo; --top)
        for (int i = block.lo; i <= top; ++i) w.push_back(i);
    return w;
}

Word staircase_word(const IndexSet& a) {
    Word w;
    for (const Interval& b : a.blocks()) {
        Word part = staircase_word(b);
        w.insert(w.end(), part.begin(), part.end());
    }
    return w;
}

Word increasing_word(const IndexSet& a) { return a.members(); }

std::vector<IndexSet> supersets(const IndexSet& base) {
    const unsigned n = base.rank();
    const std::uint64_t all = n >= 2 ? ((~std::uint64_t{0}) >> (64 - (n - 1))) << 1 : 0;
    const std::uint64_t free_bits = all & ~base.bits();
    std::vector<std::uint64_t> masks;
    for (std::uint64_t s = free_bits;; s = (s - 1) & free_bits) {
        masks.push_back(base.bits() | s);
        if (s == 0) break;
    }
    std::sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
        if (std::popcount(x) != std::popcount(y)) return std::popcount(x) < std::popcount(y);
        return x < y;
    });
    std::vector<IndexSet> out;
    out.reserve(masks.size());
    for (std::uint64_t m : masks) out.push_back(IndexSet::from_bits(n, m));
    return out;
}

} // namespace peterson
