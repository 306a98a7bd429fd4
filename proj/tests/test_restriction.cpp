#include "doctest.h"

#include "peterson/oracle.hpp"
#include "peterson/restriction.hpp"
#include "peterson/subset.hpp"

using namespace peterson;

TEST_CASE("single-run restriction values") {
    CHECK(block_restriction({2, 3}, {1, 6}) == Monomial{60, 2});
    CHECK(block_restriction({1, 1}, {1, 2}) == Monomial{2, 1});
    CHECK(block_restriction({1, 1}, {1, 3}) == Monomial{3, 1});
    CHECK(block_restriction({2, 2}, {1, 3}) == Monomial{4, 1});
    CHECK(block_restriction({1, 3}, {1, 3}) == Monomial{6, 3});
    CHECK_THROWS_AS(block_restriction({1, 3}, {2, 5}), std::invalid_argument);
}

TEST_CASE("restriction is zero off the support and one for the empty class") {
    CHECK(restriction(IndexSet(4, {1, 3}), IndexSet(4, {1, 2})).is_zero());
    CHECK(restriction(IndexSet(4, {1}), IndexSet(4, {2, 3})).is_zero());
    CHECK(restriction(IndexSet(4), IndexSet(4, {1, 3})) == Monomial::one());
    CHECK(restriction(IndexSet(4), IndexSet(4)) == Monomial::one());
}

TEST_CASE("restriction multiplies over the runs of the class") {
    CHECK(restriction(IndexSet(6, {1, 4}), IndexSet(6, {1, 2, 4, 5})) == Monomial{4, 2});
    CHECK(restriction(IndexSet(4, {1}), IndexSet(4, {1, 2, 3})) == Monomial{3, 1});
    CHECK(restriction(IndexSet(4, {2}), IndexSet(4, {1, 2, 3})) == Monomial{4, 1});
}

TEST_CASE("self restriction is the product of run factorials") {
    CHECK(self_restriction(IndexSet(5, {2, 3, 4})) == Monomial{6, 3});
    CHECK(self_restriction(IndexSet(5, {1, 3})) == Monomial{1, 2});
    CHECK(self_restriction(IndexSet(5)) == Monomial::one());
}

TEST_CASE("restriction at the class itself matches self_restriction") {
    for (unsigned n = 2; n <= 6; ++n) {
        const std::uint64_t all = (std::uint64_t{1} << n) - 2;
        for (std::uint64_t bits = 0; bits <= all; bits += 2) {
            IndexSet a = IndexSet::from_bits(n, bits);
            CHECK(restriction(a, a) == self_restriction(a));
        }
    }
}

TEST_CASE("closed form agrees with the subword count everywhere up to rank 6") {
    for (unsigned n = 2; n <= 6; ++n) {
        const std::uint64_t all = (std::uint64_t{1} << n) - 2;
        for (std::uint64_t cbits = 0; cbits <= all; cbits += 2) {
            IndexSet c = IndexSet::from_bits(n, cbits);
            std::uint64_t abits = cbits;
            for (;;) {
                IndexSet a = IndexSet::from_bits(n, abits);
                CHECK(restriction(a, c) == subword_restriction(a, c));
                if (abits == 0) break;
                abits = (abits - 1) & cbits;
            }
        }
    }
}

TEST_CASE("restriction ignores far-away members of the fixed point") {
    IndexSet a(8, {2, 3});
    Monomial base = restriction(a, IndexSet(8, {2, 3}));
    CHECK(restriction(a, IndexSet(8, {2, 3, 5})) == base);
    CHECK(restriction(a, IndexSet(8, {2, 3, 6, 7})) == base);
    CHECK(restriction(a, IndexSet(8, {2, 3, 4})) != base);
}
