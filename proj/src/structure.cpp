#include "peterson/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace peterson {

namespace {

Interval hull(const Interval& x, const Interval& y) {
    return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
}

// Maximal runs of a and b together, ordered by (lo, hi). The sums below
// are invariant under reorderings of equal tails, but a fixed order keeps
// memo keys and traversal deterministic.
std::vector<Interval> merged_runs(const IndexSet& a, const IndexSet& b) {
    std::vector<Interval> runs = a.blocks();
    for (const Interval& r : b.blocks()) runs.push_back(r);
    std::sort(runs.begin(), runs.end());
    return runs;
}

std::uint64_t pack_interval(const Interval& v) {
    return static_cast<std::uint64_t>(v.lo) | static_cast<std::uint64_t>(v.hi) << 8;
}

} // namespace

Monomial StructureConstants::consecutive_coefficient(const Interval& a, const Interval& b,
                                                     const Interval& c) {
    if (!c.contains(a) || !c.contains(b)) return Monomial::zero();
    const int d = a.size() + b.size() - c.size();
    if (d < 0) return Monomial::zero();
    BigInt m1 = multinomial(a.hi - b.lo + 1, {d, a.lo - c.lo, c.hi - b.hi});
    if (m1 == 0) return Monomial::zero();
    BigInt m2 = multinomial(b.hi - a.lo + 1, {d, b.lo - c.lo, c.hi - a.hi});
    if (m2 == 0) return Monomial::zero();
    return Monomial{factorial(d) * m1 * m2, d};
}

Monomial StructureConstants::union_consecutive_coefficient(const IndexSet& a, const IndexSet& b,
                                                           const Interval& c) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("union_consecutive_coefficient needs nonempty operands");
    const IndexSet joined = a | b;
    if (!joined.is_consecutive())
        throw std::invalid_argument("union_consecutive_coefficient needs a gap-free union, got {" +
                                    joined.str() + "}");
    if (joined.tail() < c.lo || c.hi < joined.head() || c.size() > a.size() + b.size())
        return Monomial::zero();

    const std::vector<Interval> runs = merged_runs(a, b);
    // Fold the runs left to right; each step sums over the run the partial
    // product can land in, and the last step lands in c itself.
    auto fold = [&](auto&& self, const Interval& carry, size_t idx) -> Monomial {
        if (idx + 1 == runs.size()) return consecutive_coefficient(carry, runs[idx], c);
        const Interval need = hull(carry, runs[idx]);
        const int cap = carry.size() + runs[idx].size();
        Monomial total;
        for (int lo = c.lo; lo <= need.lo; ++lo) {
            for (int hi = need.hi; hi <= c.hi; ++hi) {
                if (hi - lo + 1 > cap) continue;
                Monomial step = consecutive_coefficient(carry, runs[idx], {lo, hi});
                if (step.is_zero()) continue;
                Monomial rest = self(self, {lo, hi}, idx + 1);
                if (!rest.is_zero()) total += step * rest;
            }
        }
        return total;
    };
    return fold(fold, runs[0], 1);
}

Monomial StructureConstants::block_coefficient(const IndexSet& a, const IndexSet& b,
                                               const Interval& c) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("block_coefficient needs nonempty operands");
    const IndexSet joined = a | b;
    if (joined.tail() < c.lo || c.hi < joined.head() || c.size() > a.size() + b.size())
        return Monomial::zero();

    const TripleKey key{a.bits(), b.bits(), pack_interval(c)};
    if (auto it = block_memo_.find(key); it != block_memo_.end()) return it->second;

    Monomial result;
    const std::vector<Interval> gaps = joined.blocks();
    if (gaps.size() == 1) {
        result = union_consecutive_coefficient(a, b, c);
    } else {
        const unsigned n = joined.rank();
        struct Piece {
            IndexSet a_part, b_part;
            Interval span;
            int cap;
        };
        std::vector<Piece> pieces;
        for (const Interval& d : gaps) {
            IndexSet mask = IndexSet::interval(n, d);
            Piece p{a & mask, b & mask, d, 0};
            p.cap = p.a_part.size() + p.b_part.size();
            pieces.push_back(std::move(p));
        }
        // Choose a run around each piece, multiply the per-piece
        // coefficients, then fold the chosen runs into c.
        std::vector<Interval> chosen(pieces.size());
        auto sweep = [&](auto&& self, size_t idx, const Monomial& acc) -> Monomial {
            if (idx == pieces.size()) {
                Monomial tail = multi_block_coefficient(chosen, c);
                return tail.is_zero() ? Monomial::zero() : acc * tail;
            }
            const Piece& p = pieces[idx];
            if (p.a_part.empty() || p.b_part.empty()) {
                // One factor is the identity on this run, so the run passes
                // through unchanged: the only admissible choice is the run itself.
                chosen[idx] = p.span;
                return self(self, idx + 1, acc);
            }
            Monomial total;
            for (int lo = c.lo; lo <= p.span.lo; ++lo) {
                for (int hi = p.span.hi; hi <= c.hi; ++hi) {
                    if (hi - lo + 1 > p.cap) continue;
                    Monomial f = block_coefficient(p.a_part, p.b_part, {lo, hi});
                    if (f.is_zero()) continue;
                    chosen[idx] = {lo, hi};
                    Monomial rest = self(self, idx + 1, acc * f);
                    if (!rest.is_zero()) total += rest;
                }
            }
            return total;
        };
        result = sweep(sweep, 0, Monomial::one());
    }

    block_memo_.emplace(key, result);
    return result;
}

Monomial StructureConstants::multi_block_coefficient(std::vector<Interval> parts,
                                                     const Interval& target) {
    if (parts.size() == 1)
        return parts[0] == target ? Monomial::one() : Monomial::zero();
    std::sort(parts.begin(), parts.end());

    std::string key;
    key.reserve(parts.size() * 2 + 2);
    for (const Interval& p : parts) {
        key += static_cast<char>(p.lo);
        key += static_cast<char>(p.hi);
    }
    key += static_cast<char>(target.lo);
    key += static_cast<char>(target.hi);
    if (auto it = multi_memo_.find(key); it != multi_memo_.end()) return it->second;

    // Merge the mergeable pair with the smallest tails first (parts are
    // sorted, so the first hit in this scan is that pair).
    size_t fi = parts.size(), fj = parts.size();
    for (size_t i = 0; i < parts.size() && fi == parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            if (parts[j].lo <= parts[i].hi + 1) {
                fi = i;
                fj = j;
                break;
            }

    Monomial total;
    if (fi < parts.size()) {
        const Interval need = hull(parts[fi], parts[fj]);
        const int cap = parts[fi].size() + parts[fj].size();
        std::vector<Interval> rest;
        for (size_t t = 0; t < parts.size(); ++t)
            if (t != fi && t != fj) rest.push_back(parts[t]);
        rest.push_back({});
        for (int lo = target.lo; lo <= need.lo; ++lo) {
            for (int hi = need.hi; hi <= target.hi; ++hi) {
                if (hi - lo + 1 > cap) continue;
                Monomial f = consecutive_coefficient(parts[fi], parts[fj], {lo, hi});
                if (f.is_zero()) continue;
                rest.back() = {lo, hi};
                Monomial deeper = multi_block_coefficient(rest, target);
                if (!deeper.is_zero()) total += f * deeper;
            }
        }
    }

    multi_memo_.emplace(std::move(key), total);
    return total;
}

Monomial StructureConstants::coefficient(const IndexSet& a_in, const IndexSet& b_in,
                                         const IndexSet& c_in) {
    const unsigned n = std::max({a_in.rank(), b_in.rank(), c_in.rank()});
    const IndexSet a = a_in.with_rank(n), b = b_in.with_rank(n), c = c_in.with_rank(n);

    if (a.empty()) return b == c ? Monomial::one() : Monomial::zero();
    if (b.empty()) return a == c ? Monomial::one() : Monomial::zero();
    if (!(a | b).subset_of(c) || c.size() > a.size() + b.size()) return Monomial::zero();

    const TripleKey key{a.bits(), b.bits(), c.bits()};
    if (auto it = general_memo_.find(key); it != general_memo_.end()) return it->second;

    Monomial result = Monomial::one();
    for (const Interval& run : c.blocks()) {
        IndexSet mask = IndexSet::interval(n, run);
        IndexSet ak = a & mask, bk = b & mask;
        Monomial factor;
        if (ak.empty())
            factor = bk == mask ? Monomial::one() : Monomial::zero();
        else if (bk.empty())
            factor = ak == mask ? Monomial::one() : Monomial::zero();
        else
            factor = block_coefficient(ak, bk, run);
        if (factor.is_zero()) {
            result = Monomial::zero();
            break;
        }
        result *= factor;
    }

    general_memo_.emplace(key, result);
    return result;
}

bool StructureConstants::nonvanishing(const IndexSet& a, const IndexSet& b, const IndexSet& c) {
    if (((a.bits() | b.bits()) & ~c.bits()) != 0) return false;
    for (const Interval& run : c.blocks()) {
        std::uint64_t mask = ((std::uint64_t{2} << run.hi) - 1) & ~((std::uint64_t{1} << run.lo) - 1);
        if (run.size() > std::popcount(a.bits() & mask) + std::popcount(b.bits() & mask))
            return false;
    }
    return true;
}

Expansion StructureConstants::expand(const IndexSet& a, const IndexSet& b) {
    const unsigned n = std::max(a.rank(), b.rank());
    Expansion out{a.with_rank(n), b.with_rank(n), {}};
    for (const IndexSet& c : supersets(out.a | out.b)) {
        if (c.size() > a.size() + b.size()) continue;
        Monomial m = coefficient(out.a, out.b, c);
        if (!m.is_zero()) out.rows.emplace_back(c, std::move(m));
    }
    return out;
}

BigInt StructureConstants::ordinary(const IndexSet& a, const IndexSet& b, const IndexSet& c) {
    if (c.size() != a.size() + b.size()) return 0;
    Monomial m = coefficient(a, b, c);
    if (m.is_zero()) return 0;
    if (m.power != 0)
        throw std::logic_error("top-degree coefficient carries t^" + std::to_string(m.power));
    return m.coeff;
}

namespace {

constexpr char kCacheMagic[4] = {'P', 'S', 'B', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

template <typename T> void write_pod(std::ostream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T> bool read_pod(std::istream& is, T& v) {
    return static_cast<bool>(is.read(reinterpret_cast<char*>(&v), sizeof v));
}

} // namespace

void StructureConstants::save_cache(const std::string& path) const {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot write cache file " + path);
    os.write(kCacheMagic, 4);
    write_pod(os, kCacheVersion);
    write_pod(os, static_cast<std::uint64_t>(general_memo_.size()));
    for (const auto& [key, value] : general_memo_) {
        write_pod(os, key.a);
        write_pod(os, key.b);
        write_pod(os, key.c);
        write_pod(os, static_cast<std::int32_t>(value.power));
        std::vector<std::uint8_t> bytes;
        export_bits(value.coeff, std::back_inserter(bytes), 8);
        write_pod(os, static_cast<std::uint32_t>(bytes.size()));
        os.write(reinterpret_cast<const char*>(bytes.data()),
                 static_cast<std::streamsize>(bytes.size()));
    }
    if (!os) throw std::runtime_error("short write to cache file " + path);
}

size_t StructureConstants::load_cache(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read cache file " + path);
    char magic[4];
    if (!is.read(magic, 4) || !std::equal(magic, magic + 4, kCacheMagic))
        throw std::runtime_error("cache file " + path + " has the wrong header");
    std::uint32_t version = 0;
    if (!read_pod(is, version) || version != kCacheVersion)
        throw std::runtime_error("cache file " + path + " has unsupported version");
    std::uint64_t count = 0;
    if (!read_pod(is, count)) throw std::runtime_error("cache file " + path + " is truncated");
    size_t loaded = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        TripleKey key{};
        std::int32_t power = 0;
        std::uint32_t len = 0;
        if (!read_pod(is, key.a) || !read_pod(is, key.b) || !read_pod(is, key.c) ||
            !read_pod(is, power) || !read_pod(is, len))
            throw std::runtime_error("cache file " + path + " is truncated");
        std::vector<std::uint8_t> bytes(len);
        if (len && !is.read(reinterpret_cast<char*>(bytes.data()), len))
            throw std::runtime_error("cache file " + path + " is truncated");
        BigInt coeff = 0;
        if (!bytes.empty()) import_bits(coeff, bytes.begin(), bytes.end(), 8);
        general_memo_.insert_or_assign(key, Monomial{std::move(coeff), power});
        ++loaded;
    }
    return loaded;
}

} // namespace peterson
