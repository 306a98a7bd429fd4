#include "peterson/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace peterson {

namespace {

using Perm = std::vector<std::uint8_t>; // one-line form, positions 0-based

Perm identity_perm(unsigned n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), std::uint8_t{1});
    return p;
}

// Right multiplication by the simple transposition j swaps positions j, j+1.
void apply_right(Perm& p, int j) { std::swap(p[j - 1], p[j]); }

} // namespace

std::vector<RootValue> letter_weights(const IndexSet& c) {
    int lo_of[65] = {};
    for (const Interval& run : c.blocks())
        for (int i = run.lo; i <= run.hi; ++i) lo_of[i] = run.lo;
    std::vector<RootValue> out;
    for (int j : staircase_word(c)) out.push_back({j - lo_of[j] + 1});
    return out;
}

Monomial subword_restriction(const IndexSet& a, const IndexSet& c) {
    const auto letters = a.members();
    const int k = static_cast<int>(letters.size());
    if (k > 24) throw std::invalid_argument("subword_restriction: class has too many members");

    const unsigned n = std::max(a.rank(), c.rank());
    const std::uint32_t nstates = std::uint32_t{1} << k;

    // State u encodes the partial product: the increasing product over the
    // members of a selected by u. These are exactly the permutations a
    // reduced prefix can reach, so anything else is a dead end.
    std::map<Perm, std::uint32_t> state_of;
    std::vector<Perm> perm_of(nstates);
    for (std::uint32_t u = 0; u < nstates; ++u) {
        Perm p = identity_perm(n);
        for (int i = 0; i < k; ++i)
            if (u >> i & 1) apply_right(p, letters[static_cast<size_t>(i)]);
        state_of.emplace(p, u);
        perm_of[u] = std::move(p);
    }

    // next[u*n + j] = successor state when letter j extends state u, else -1.
    std::vector<std::int64_t> next(static_cast<size_t>(nstates) * n, -1);
    for (std::uint32_t u = 0; u < nstates; ++u) {
        for (int j = 1; j < static_cast<int>(n); ++j) {
            Perm p = perm_of[u];
            apply_right(p, j);
            auto it = state_of.find(p);
            if (it != state_of.end() && std::popcount(it->second) == std::popcount(u) + 1)
                next[static_cast<size_t>(u) * n + static_cast<size_t>(j)] =
                    static_cast<std::int64_t>(it->second);
        }
    }

    std::vector<std::uint32_t> by_popcount_desc(nstates);
    std::iota(by_popcount_desc.begin(), by_popcount_desc.end(), 0u);
    std::sort(by_popcount_desc.begin(), by_popcount_desc.end(),
              [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) > std::popcount(y); });

    const Word word = staircase_word(c);
    const auto weights = letter_weights(c);

    std::vector<BigInt> dp(nstates);
    dp[0] = 1;
    for (size_t pos = 0; pos < word.size(); ++pos) {
        const int j = word[pos];
        const int weight = weights[pos].multiplier;
        // Descending popcount keeps the update one-shot: a position may
        // contribute at most one letter.
        for (std::uint32_t u : by_popcount_desc) {
            if (dp[u] == 0) continue;
            std::int64_t v = next[static_cast<size_t>(u) * n + static_cast<size_t>(j)];
            if (v >= 0) dp[static_cast<size_t>(v)] += dp[u] * weight;
        }
    }
    return Monomial{dp[nstates - 1], k};
}

namespace {

Monomial restrict_via(RestrictionBackend backend, const IndexSet& a, const IndexSet& c) {
    return backend == RestrictionBackend::Subword ? subword_restriction(a, c)
                                                  : restriction(a, c);
}

} // namespace

RestrictionVector restriction_vector(const IndexSet& a, RestrictionBackend backend) {
    RestrictionVector out{a, {}};
    for (const IndexSet& c : supersets(IndexSet(a.rank()))) {
        Monomial r = restrict_via(backend, a, c);
        if (!r.is_zero()) out.values.emplace_back(c, std::move(r));
    }
    return out;
}

std::vector<std::pair<IndexSet, Monomial>>
localize_product(const IndexSet& a, const IndexSet& b, RestrictionBackend backend) {
    const IndexSet base = a | b;

    std::vector<std::pair<IndexSet, Monomial>> solved;
    for (const IndexSet& d : supersets(base)) {
        try {
            Monomial lhs = restrict_via(backend, a, d) * restrict_via(backend, b, d);
            Monomial carried;
            for (const auto& [c, bc] : solved)
                if (c.subset_of(d)) carried += bc * restrict_via(backend, c, d);
            Monomial numerator = lhs - carried;
            Monomial self = backend == RestrictionBackend::Subword ? subword_restriction(d, d)
                                                                   : self_restriction(d);
            Monomial bd = numerator.exact_div(self);
            if (!bd.is_zero() && bd.power != a.size() + b.size() - d.size())
                throw std::logic_error("coefficient degree " + std::to_string(bd.power) +
                                       " violates |A|+|B|-|D|");
            if (!bd.is_zero()) solved.emplace_back(d, std::move(bd));
        } catch (const std::exception& e) {
            throw std::runtime_error("localization failed at A={" + a.str() + "} B={" + b.str() +
                                     "} D={" + d.str() + "}: " + e.what());
        }
    }
    return solved;
}

} // namespace peterson
