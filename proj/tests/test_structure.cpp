#include "doctest.h"

#include "peterson/combinatorics.hpp"
#include "peterson/oracle.hpp"
#include "peterson/structure.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace peterson;

namespace {

std::vector<IndexSet> all_subsets(unsigned n) {
    std::vector<IndexSet> out;
    const std::uint64_t all = (std::uint64_t{1} << n) - 2;
    for (std::uint64_t bits = 0; bits <= all; bits += 2)
        out.push_back(IndexSet::from_bits(n, bits));
    return out;
}

} // namespace

TEST_CASE("three-run closed form on pinned products") {
    CHECK(StructureConstants::consecutive_coefficient({1, 2}, {2, 4}, {1, 4}) == Monomial{12, 1});
    CHECK(StructureConstants::consecutive_coefficient({1, 4}, {4, 5}, {1, 6}) == Monomial{10, 0});
    CHECK(StructureConstants::consecutive_coefficient({1, 2}, {2, 4}, {1, 5}) == Monomial{4, 0});
    CHECK(StructureConstants::consecutive_coefficient({1, 5}, {4, 5}, {1, 6}) == Monomial{40, 1});
}

TEST_CASE("three-run closed form vanishes off the support") {
    CHECK(StructureConstants::consecutive_coefficient({1, 2}, {2, 4}, {2, 4}).is_zero());
    CHECK(StructureConstants::consecutive_coefficient({1, 2}, {4, 5}, {1, 5}).is_zero());
    CHECK(StructureConstants::consecutive_coefficient({1, 1}, {3, 3}, {1, 3}).is_zero());
    CHECK(StructureConstants::consecutive_coefficient({1, 2}, {2, 3}, {1, 6}).is_zero());
}

TEST_CASE("adjacent runs multiply by a binomial count") {
    StructureConstants calc;
    for (int split = 1; split <= 5; ++split) {
        IndexSet a = IndexSet::interval(8, 1, split);
        IndexSet b = IndexSet::interval(8, split + 1, 6);
        Monomial got = calc.coefficient(a, b, IndexSet::interval(8, 1, 6));
        CHECK(got == Monomial{binomial(6, split), 0});
    }
}

TEST_CASE("overlapping runs pick up powers of t") {
    StructureConstants calc;
    // both classes the same full run: top coefficient of the square
    CHECK(calc.coefficient(IndexSet(4, {1, 2}), IndexSet(4, {1, 2}), IndexSet(4, {1, 2})) ==
          Monomial{2, 2});
    CHECK(calc.union_consecutive_coefficient(IndexSet(3, {1}), IndexSet(3, {2}), {1, 2}) ==
          Monomial{2, 0});
}

TEST_CASE("union recursion reproduces a long product") {
    StructureConstants calc;
    IndexSet a(7, {1, 2, 4, 5}), b(7, {2, 3, 4});
    CHECK(calc.coefficient(a, b, IndexSet(7, {1, 2, 3, 4, 5, 6})) == Monomial{280, 1});
}

TEST_CASE("gapped unions split into pieces before folding") {
    StructureConstants calc;
    CHECK(calc.block_coefficient(IndexSet(4, {1, 3}), IndexSet(4, {2}), {1, 3}) ==
          Monomial{6, 0});
    CHECK(calc.block_coefficient(IndexSet(4, {1, 3}), IndexSet(4, {1, 3}), {1, 3}) ==
          Monomial{12, 1});
    CHECK(calc.block_coefficient(IndexSet(4, {1}), IndexSet(4, {3}), {1, 3}).is_zero());
    CHECK_THROWS_AS(calc.block_coefficient(IndexSet(4), IndexSet(4, {1}), {1, 3}),
                    std::invalid_argument);
}

TEST_CASE("disconnected targets multiply blockwise") {
    StructureConstants calc;
    Monomial left = calc.coefficient(IndexSet(6, {1}), IndexSet(6, {1}), IndexSet(6, {1}));
    Monomial right = calc.coefficient(IndexSet(6, {4}), IndexSet(6, {4}), IndexSet(6, {4}));
    Monomial both = calc.coefficient(IndexSet(6, {1, 4}), IndexSet(6, {1, 4}),
                                     IndexSet(6, {1, 4}));
    CHECK(both == left * right);
    CHECK(calc.coefficient(IndexSet(6, {1}), IndexSet(6, {4}), IndexSet(6, {1, 4})) ==
          Monomial::one());
}

TEST_CASE("empty classes act as the identity") {
    StructureConstants calc;
    IndexSet e(5), b(5, {2, 3});
    CHECK(calc.coefficient(e, b, b) == Monomial::one());
    CHECK(calc.coefficient(b, e, b) == Monomial::one());
    CHECK(calc.coefficient(e, e, e) == Monomial::one());
    CHECK(calc.coefficient(e, b, IndexSet(5, {2})).is_zero());
    CHECK(calc.coefficient(e, b, IndexSet(5, {1, 2, 3})).is_zero());
}

TEST_CASE("coefficient is symmetric in the two classes") {
    StructureConstants calc;
    for (const IndexSet& a : all_subsets(5))
        for (const IndexSet& b : all_subsets(5))
            for (const IndexSet& c : all_subsets(5))
                CHECK(calc.coefficient(a, b, c) == calc.coefficient(b, a, c));
}

TEST_CASE("nonvanishing predicts exactly the nonzero coefficients") {
    StructureConstants calc;
    for (const IndexSet& a : all_subsets(5))
        for (const IndexSet& b : all_subsets(5))
            for (const IndexSet& c : all_subsets(5)) {
                Monomial value = calc.coefficient(a, b, c);
                CHECK(StructureConstants::nonvanishing(a, b, c) == !value.is_zero());
                if (!value.is_zero()) {
                    CHECK(value.coeff > 0);
                    CHECK(value.power == a.size() + b.size() - c.size());
                }
            }
}

TEST_CASE("expansions agree with the localization oracle") {
    StructureConstants calc;
    for (const IndexSet& a : all_subsets(5))
        for (const IndexSet& b : all_subsets(5)) {
            Expansion table = calc.expand(a, b);
            CHECK(table.rows == localize_product(a, b));
        }
}

TEST_CASE("expansion of the square of the first class") {
    StructureConstants calc;
    Expansion table = calc.expand(IndexSet(3, {1}), IndexSet(3, {1}));
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0].first == IndexSet(3, {1}));
    CHECK(table.rows[0].second == Monomial{1, 1});
    CHECK(table.rows[1].first == IndexSet(3, {1, 2}));
    CHECK(table.rows[1].second == Monomial::one());
}

TEST_CASE("ordinary coefficients keep only the top degree") {
    StructureConstants calc;
    CHECK(calc.ordinary(IndexSet(6, {1, 2}), IndexSet(6, {2, 3, 4}),
                        IndexSet(6, {1, 2, 3, 4, 5})) == 4);
    CHECK(calc.ordinary(IndexSet(6, {1, 2}), IndexSet(6, {2, 3, 4}),
                        IndexSet(6, {1, 2, 3, 4})) == 0);
    CHECK(calc.ordinary(IndexSet(3, {1}), IndexSet(3, {2}), IndexSet(3, {1, 2})) == 2);
}

TEST_CASE("ordinary values reduce to a two-binomial product on single runs") {
    StructureConstants calc;
    const int n = 8;
    for (int alo = 1; alo < n; ++alo)
        for (int ahi = alo; ahi < n; ++ahi)
            for (int blo = alo; blo < n; ++blo) // order the tails: 𝒯_A <= 𝒯_B
                for (int bhi = blo; bhi < n; ++bhi)
                    for (int clo = 1; clo < n; ++clo)
                        for (int chi = clo; chi < n; ++chi) {
                            Interval a{alo, ahi}, b{blo, bhi}, c{clo, chi};
                            if (c.size() != a.size() + b.size()) continue;
                            if (!c.contains(a) || !c.contains(b)) continue;
                            BigInt expected = binomial(a.hi - b.lo + 1, a.lo - c.lo) *
                                              binomial(b.hi - a.lo + 1, b.lo - c.lo);
                            CHECK(calc.ordinary(IndexSet::interval(n, a),
                                                IndexSet::interval(n, b),
                                                IndexSet::interval(n, c)) == expected);
                        }
}

TEST_CASE("nested classes convert to an intertwined pair") {
    StructureConstants calc;
    const unsigned n = 6;
    for (int alo = 1; alo < static_cast<int>(n); ++alo)
        for (int ahi = alo; ahi < static_cast<int>(n); ++ahi)
            for (int blo = alo; blo <= ahi; ++blo)
                for (int bhi = blo; bhi <= ahi; ++bhi) {
                    Interval a{alo, ahi}, b{blo, bhi};
                    IndexSet sa = IndexSet::interval(n, a), sb = IndexSet::interval(n, b);
                    IndexSet sa2 = IndexSet::interval(n, a.lo, b.hi);
                    IndexSet sb2 = IndexSet::interval(n, b.lo, a.hi);
                    BigInt lhs_scale = factorial(a.size()) * factorial(b.size());
                    BigInt rhs_scale = factorial(b.hi - a.lo + 1) * factorial(a.hi - b.lo + 1);
                    for (const IndexSet& c : supersets(sa)) {
                        Monomial lhs = calc.coefficient(sa, sb, c);
                        Monomial rhs = calc.coefficient(sa2, sb2, c);
                        CHECK(lhs.coeff * lhs_scale == rhs.coeff * rhs_scale);
                        if (!lhs.is_zero()) CHECK(lhs.power == rhs.power);
                    }
                }
}

TEST_CASE("memo snapshots round-trip through a file") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "peterson_memo_test.bin";

    StructureConstants writer;
    Expansion table = writer.expand(IndexSet(7, {1, 2, 4, 5}), IndexSet(7, {2, 3, 4}));
    REQUIRE(!table.rows.empty());
    writer.save_cache(path.string());

    StructureConstants reader;
    size_t loaded = reader.load_cache(path.string());
    CHECK(loaded > 0);
    Expansion again = reader.expand(IndexSet(7, {1, 2, 4, 5}), IndexSet(7, {2, 3, 4}));
    CHECK(again.rows == table.rows);

    CHECK_THROWS_AS(reader.load_cache((fs::temp_directory_path() / "missing.bin").string()),
                    std::runtime_error);
    std::remove(path.string().c_str());
}

TEST_CASE("cache files with a foreign header are rejected") {
    namespace fs = std::filesystem;
    const fs::path path = fs::temp_directory_path() / "peterson_memo_bad.bin";
    {
        std::ofstream os(path, std::ios::binary);
        os << "not a snapshot";
    }
    StructureConstants calc;
    CHECK_THROWS_AS(calc.load_cache(path.string()), std::runtime_error);
    std::remove(path.string().c_str());
}
