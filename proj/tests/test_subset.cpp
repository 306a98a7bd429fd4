#include "doctest.h"

#include "peterson/subset.hpp"

#include <random>
#include <stdexcept>

using namespace peterson;

TEST_CASE("parse accepts lists, ranges, and the empty set") {
    IndexSet s = IndexSet::parse(6, "1,2,4-5");
    CHECK(s.members() == std::vector<int>{1, 2, 4, 5});
    CHECK(s.rank() == 6);
    CHECK(IndexSet::parse(4, "").empty());
    CHECK(IndexSet::parse(4, "3") == IndexSet(4, {3}));
    CHECK(IndexSet::parse(9, "2-2") == IndexSet(9, {2}));
}

TEST_CASE("parse rejects malformed and out-of-range input") {
    CHECK_THROWS_AS(IndexSet::parse(4, "0"), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::parse(4, "4"), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::parse(4, "x"), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::parse(4, "1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::parse(4, "3-1"), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::parse(0, ""), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::parse(65, "1"), std::invalid_argument);
    CHECK(IndexSet::parse(1, "").empty());
}

TEST_CASE("str and parse round-trip") {
    CHECK(IndexSet(6, {1, 2, 4, 5}).str() == "1,2,4,5");
    CHECK(IndexSet(6).str().empty());
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 2 + rng() % 15;
        std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 2);
        IndexSet s = IndexSet::from_bits(n, mask);
        CHECK(IndexSet::parse(n, s.str()) == s);
    }
}

TEST_CASE("blocks decompose into maximal runs") {
    IndexSet s(9, {1, 2, 4, 5, 8});
    auto runs = s.blocks();
    REQUIRE(runs.size() == 3);
    CHECK(runs[0] == Interval{1, 2});
    CHECK(runs[1] == Interval{4, 5});
    CHECK(runs[2] == Interval{8, 8});
    CHECK(IndexSet(5).blocks().empty());
}

TEST_CASE("blocks partition the set with gaps of at least two") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        unsigned n = 2 + rng() % 20;
        IndexSet s = IndexSet::from_bits(n, rng() & ((std::uint64_t{1} << n) - 2));
        auto runs = s.blocks();
        std::uint64_t rebuilt = 0;
        for (size_t i = 0; i < runs.size(); ++i) {
            CHECK(runs[i].lo <= runs[i].hi);
            if (i > 0) CHECK(runs[i].lo > runs[i - 1].hi + 1);
            for (int j = runs[i].lo; j <= runs[i].hi; ++j) rebuilt |= std::uint64_t{1} << j;
        }
        CHECK(rebuilt == s.bits());
    }
}

TEST_CASE("tail, head, and consecutiveness") {
    IndexSet s(7, {2, 3, 4});
    CHECK(s.tail() == 2);
    CHECK(s.head() == 4);
    CHECK(s.is_consecutive());
    CHECK_FALSE(IndexSet(7, {2, 4}).is_consecutive());
    CHECK_FALSE(IndexSet(7).is_consecutive());
    CHECK_THROWS_AS(IndexSet(7).tail(), std::logic_error);
    CHECK_THROWS_AS(IndexSet(7).head(), std::logic_error);
}

TEST_CASE("set algebra and containment") {
    IndexSet a(6, {1, 2}), b(6, {2, 3, 4});
    CHECK((a | b) == IndexSet(6, {1, 2, 3, 4}));
    CHECK((a & b) == IndexSet(6, {2}));
    CHECK((b - a) == IndexSet(6, {3, 4}));
    CHECK(a.subset_of(a | b));
    CHECK_FALSE(b.subset_of(a));
    CHECK(IndexSet(6).subset_of(a));
}

TEST_CASE("with_rank widens without moving members") {
    IndexSet a(3, {1, 2});
    IndexSet wide = a.with_rank(8);
    CHECK(wide.rank() == 8);
    CHECK(wide.bits() == a.bits());
    CHECK_THROWS_AS(a.with_rank(2), std::invalid_argument);
}

TEST_CASE("staircase word of a full interval descends row by row") {
    Word expected{1, 2, 3, 4, 5, 6, 1, 2, 3, 4, 5, 1, 2, 3, 4, 1, 2, 3, 1, 2, 1};
    CHECK(staircase_word(IndexSet(7, {1, 2, 3, 4, 5, 6})) == expected);
    CHECK(staircase_word(IndexSet(5, {3})) == Word{3});
    CHECK(staircase_word(Interval{2, 4}) == Word{2, 3, 4, 2, 3, 2});
}

TEST_CASE("staircase word concatenates over blocks") {
    CHECK(staircase_word(IndexSet(5, {1, 2, 4})) == Word{1, 2, 1, 4});
    CHECK(staircase_word(IndexSet(4)).empty());
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        unsigned n = 2 + rng() % 14;
        IndexSet s = IndexSet::from_bits(n, rng() & ((std::uint64_t{1} << n) - 2));
        size_t expected = 0;
        for (const Interval& run : s.blocks()) {
            size_t len = static_cast<size_t>(run.size());
            expected += len * (len + 1) / 2;
        }
        CHECK(staircase_word(s).size() == expected);
    }
}

TEST_CASE("increasing word lists members in order") {
    CHECK(increasing_word(IndexSet(6, {1, 3, 4})) == Word{1, 3, 4});
    CHECK(increasing_word(IndexSet(6)).empty());
}

TEST_CASE("supersets come back sorted by size then bits") {
    auto all = supersets(IndexSet(3, {1}));
    REQUIRE(all.size() == 2);
    CHECK(all[0] == IndexSet(3, {1}));
    CHECK(all[1] == IndexSet(3, {1, 2}));

    auto of_empty = supersets(IndexSet(3));
    CHECK(of_empty.size() == 4);
    for (size_t i = 1; i < of_empty.size(); ++i) {
        bool ordered = of_empty[i - 1].size() < of_empty[i].size() ||
                       (of_empty[i - 1].size() == of_empty[i].size() &&
                        of_empty[i - 1].bits() < of_empty[i].bits());
        CHECK(ordered);
    }
}

TEST_CASE("from_bits validates the mask against the rank") {
    CHECK_THROWS_AS(IndexSet::from_bits(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(IndexSet::from_bits(4, 1 << 4), std::invalid_argument);
    CHECK(IndexSet::from_bits(4, 0b1110).size() == 3);
}
