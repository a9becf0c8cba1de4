#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "taut/lamination.hpp"
#include "taut/reference_tables.hpp"
#include "taut/words.hpp"

using namespace taut;
using namespace taut::lamination;

namespace {

CirclePoint pt(int q, int scale, std::int64_t num, Tick t = Tick::exact) {
    return CirclePoint(q, scale, num, t);
}

std::vector<BigInt> counts(std::initializer_list<long long> xs) {
    return std::vector<BigInt>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("circle point order") {
    CHECK(pt(3, 1, 0) < pt(3, 1, 1));
    CHECK(pt(3, 1, 1) == pt(3, 2, 3));  // 1/3 = 3/9
    // Perturbed sits below exact; finer perturbed sits above coarser.
    CHECK(pt(3, 1, 1, Tick::minus_eps) < pt(3, 1, 1));
    CHECK(pt(3, 1, 1, Tick::minus_eps) < pt(3, 2, 3, Tick::minus_eps));
    // Zero approached from below wraps to the top of the circle.
    CHECK(pt(3, 1, 2) < pt(3, 1, 0, Tick::minus_eps));
    CHECK_THROWS_AS(pt(3, 1, 3), InvalidInput);
    CHECK_THROWS_AS(compare(pt(3, 1, 0), pt(4, 1, 0)), InvalidInput);
}

TEST_CASE("linking predicate") {
    const Chord c1(pt(2, 1, 0), pt(2, 1, 1));        // {0, 1/2}
    const Chord c2(pt(2, 2, 1), pt(2, 2, 3));        // {1/4, 3/4}
    const Chord c3(pt(2, 3, 1), pt(2, 2, 1));        // {1/8, 1/4}
    CHECK(links(c1, c2));
    CHECK(links(c2, c1));
    CHECK_FALSE(links(c1, c3));
    const Chord d1(pt(3, 1, 0), pt(3, 1, 1));        // {0, 1/3}
    const Chord d2(pt(3, 1, 1), pt(3, 1, 2));        // {1/3, 2/3}
    CHECK_FALSE(links(d1, d2));  // shared endpoint
}

TEST_CASE("depth-1 leaves") {
    const auto l3 = depth_leaves(3, 1);
    REQUIRE(l3.size() == 1);
    CHECK(l3[0].a == pt(3, 1, 0));
    CHECK(l3[0].b == pt(3, 1, 1));

    const auto l4 = depth_leaves(4, 1);
    REQUIRE(l4.size() == 2);
    CHECK(l4[0].a == pt(4, 1, 0));
    CHECK(l4[0].b == pt(4, 1, 1));
    CHECK(l4[1].a == pt(4, 1, 1));
    CHECK(l4[1].b == pt(4, 1, 2));
}

TEST_CASE("depth-2 leaves for q=3 land on the ninth grid") {
    const auto leaves = depth_leaves(3, 2);
    REQUIRE(leaves.size() == 3);
    std::set<std::pair<std::int64_t, std::int64_t>> got;
    for (const Chord& c : leaves) {
        CHECK(c.a.scale == 2);
        got.insert({c.a.num, c.b.num});
    }
    CHECK(got == std::set<std::pair<std::int64_t, std::int64_t>>{
                     {0, 1}, {3, 4}, {6, 7}});
}

TEST_CASE("leaf counts follow q^{n-1}(q-2)") {
    for (int q : {3, 4, 5, 6})
        for (int n = 1; n <= 5; ++n) {
            const auto leaves = depth_leaves(q, n);
            CHECK(leaves.size() == depth_leaf_count(q, n));
            std::set<std::pair<std::int64_t, std::int64_t>> distinct;
            for (const Chord& c : leaves) distinct.insert({c.a.num, c.b.num});
            CHECK(distinct.size() == leaves.size());
        }
}

TEST_CASE("build_lamination") {
    CHECK(build_lamination(3, 0).chords.empty());
    CHECK(build_lamination(2, 5).chords.empty());
    CHECK(build_lamination(3, 2).chords.size() == 4);
    CHECK(build_lamination(5, 2).chords.size() == 18);
    LaminationOptions tiny;
    tiny.chord_cap = 3;
    CHECK_THROWS_AS(build_lamination(3, 2, tiny), BudgetError);
    // Exhaustive pairwise unlinkedness at validated sizes.
    for (int q : {3, 4, 5}) {
        const Lamination lam = build_lamination(q, 4);
        for (std::size_t i = 0; i < lam.chords.size(); ++i)
            for (std::size_t j = i + 1; j < lam.chords.size(); ++j) {
                CAPTURE(q);
                CHECK_FALSE(links(lam.chords[i], lam.chords[j]));
            }
    }
}

TEST_CASE("census reproduces the published small rows") {
    CHECK(lamination::census(3, 2).counts == counts({3, 1, 1}));
    CHECK(lamination::census(3, 3).counts == counts({7, 6, 0, 1}));
    CHECK(lamination::census(4, 3).counts == counts({28, 14, 0, 1}));
    CHECK(lamination::census(3, 0).counts == counts({1}));
    CHECK(lamination::census(5, 0).counts == counts({1}));
}

TEST_CASE("census against every published row within unit-test reach") {
    for (int q : {3, 4, 5}) {
        const int n_max = q == 3 ? 9 : (q == 4 ? 7 : 6);
        for (int n = 0; n <= n_max; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            CHECK(lamination::census(q, n) == census::reference_table(q, n));
        }
    }
}

TEST_CASE("census identities and gap hold") {
    for (int q : {3, 4, 5, 6, 7})
        for (int n = 0; n <= 6; ++n) {
            const CensusTable t = lamination::census(q, n);
            CAPTURE(q);
            CAPTURE(n);
            CHECK(t.length_identity_ok());
            CHECK(t.count_identity_ok());
            CHECK(t.gap_ok());
        }
}

TEST_CASE("degree 2: the circle never splits") {
    for (int n = 0; n <= 6; ++n) {
        const CensusTable t = lamination::census(2, n);
        CHECK(t.counts[n] == 1);
        CHECK(t.total_components() == 1);
        CHECK(t.length_identity_ok());
        CHECK(t.count_identity_ok());
    }
}

TEST_CASE("census is independent of sharding") {
    const CensusTable base = lamination::census(4, 6);
    for (int shards : {2, 3, 5}) {
        CHECK(lamination::census(4, 6, {.shards = shards}) == base);
    }
}

TEST_CASE("short leaves") {
    CHECK(short_leaves(3, 1).size() == 1);
    const auto col3 = words::short_column(3, 8);
    for (int n = 1; n <= 8; ++n)
        CHECK(BigInt(short_leaves(3, n).size()) == col3.values[n]);
    CHECK(short_leaves(3, 3).size() == 7);
}

TEST_CASE("short leaves are exactly the 1-unbordered words") {
    for (int q : {3, 4, 5}) {
        const int n_max = q == 3 ? 8 : (q == 4 ? 6 : 5);
        for (int n = 1; n <= n_max; ++n) {
            std::set<std::uint64_t> from_leaves;
            for (const Chord& c : short_leaves(q, n))
                from_leaves.insert(static_cast<std::uint64_t>(c.a.num));

            // Every x-word (q-2 prepended to the digits of the smaller
            // endpoint) must be 1-unbordered, and conversely every
            // 1-unbordered word of length n+1 starting with q-2 must occur.
            std::set<std::uint64_t> from_words;
            std::uint64_t total = 1;
            for (int i = 0; i < n; ++i) total *= q;
            for (std::uint64_t v = 0; v < total; ++v) {
                std::vector<std::uint8_t> digits(n + 1);
                digits[0] = static_cast<std::uint8_t>(q - 2);
                std::uint64_t w = v;
                for (int i = n; i >= 1; --i) {
                    digits[i] = static_cast<std::uint8_t>(w % q);
                    w /= q;
                }
                if (words::is_one_unbordered(words::DigitWord(q, digits))) {
                    CHECK(digits[n] <= q - 3);
                    from_words.insert(v);
                }
            }
            CAPTURE(q);
            CAPTURE(n);
            CHECK(from_leaves == from_words);
        }
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(depth_leaves(2, 1), InvalidInput);
    CHECK_THROWS_AS(depth_leaves(3, 0), InvalidInput);
    CHECK_THROWS_AS(lamination::census(1, 1), InvalidInput);
    CHECK_THROWS_AS(lamination::census(3, -1), InvalidInput);
}
