#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle_pinch.hpp"
#include "taut/circle.hpp"
#include "taut/pinch.hpp"

using namespace taut;
using namespace taut::lamination;

namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

std::vector<std::uint64_t> sorted_pinch(std::uint64_t grid,
                                        std::vector<Pair> chords) {
    return pinch_grid(grid, std::move(chords)).sorted_lengths();
}

// Rejection generator: keeps a random pair when it crosses nothing kept so
// far.  Shared endpoints allowed or not.
std::vector<Pair> gen_rejection(std::mt19937& rng, std::uint64_t grid,
                                int target, bool allow_shared) {
    std::uniform_int_distribution<std::uint64_t> pick(0, grid - 1);
    std::vector<Pair> out;
    for (int attempts = 0; attempts < 6 * target; ++attempts) {
        std::uint64_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        bool ok = true;
        for (const Pair& c : out) {
            const bool share = c.first == a || c.first == b ||
                               c.second == a || c.second == b;
            if (share) {
                if (!allow_shared || (c.first == a && c.second == b)) ok = false;
                if (!ok) break;
                continue;
            }
            const bool in1 = a < c.first && c.first < b;
            const bool in2 = a < c.second && c.second < b;
            if (in1 != in2) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back({a, b});
        if (static_cast<int>(out.size()) >= target) break;
    }
    return out;
}

// Nested-interval generator: recursively place a chord inside an interval,
// then fill the inside and the remainder.  Endpoint reuse is what builds
// chains.
void gen_nested(std::mt19937& rng, std::uint64_t lo, std::uint64_t hi,
                bool allow_shared, int depth, std::vector<Pair>& out) {
    if (hi - lo < 2 || depth > 8 || out.size() > 40) return;
    std::uniform_int_distribution<std::uint64_t> pa(lo, hi - 2);
    const std::uint64_t a = pa(rng);
    std::uniform_int_distribution<std::uint64_t> pb(a + 1, hi - 1);
    const std::uint64_t b = pb(rng);
    out.push_back({a, b});
    std::uniform_int_distribution<int> coin(0, 3);
    if (coin(rng) != 0)
        gen_nested(rng, allow_shared ? a : a + 1, allow_shared ? b + 1 : b,
                   allow_shared, depth + 1, out);
    if (coin(rng) != 0 && b + 1 < hi)
        gen_nested(rng, allow_shared ? b : b + 1, hi, allow_shared, depth + 1,
                   out);
}

}  // namespace

TEST_CASE("pinch basics") {
    CHECK(sorted_pinch(7, {}) == std::vector<std::uint64_t>{7});
    CHECK(sorted_pinch(3, {{0, 1}}) == std::vector<std::uint64_t>{1, 2});
    // Two chords sharing the endpoint 1 on the 4-grid.
    CHECK(sorted_pinch(4, {{0, 1}, {1, 2}}) ==
          std::vector<std::uint64_t>{1, 1, 2});
    // Chains around the whole circle give petals.
    CHECK(sorted_pinch(3, {{0, 1}, {1, 2}}) ==
          std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("degenerate endpoint cycles give zero-length components") {
    CHECK(sorted_pinch(5, {{0, 2}, {2, 4}, {0, 4}}) ==
          std::vector<std::uint64_t>{0, 1, 2, 2});
}

TEST_CASE("linked input is rejected") {
    CHECK_THROWS_AS(pinch_grid(8, {{0, 4}, {2, 6}}), InvalidInput);
    CHECK_THROWS_AS(pinch_grid(8, {{0, 8}}), InvalidInput);
    CHECK_THROWS_AS(pinch_grid(8, {{3, 3}}), InvalidInput);
}

TEST_CASE("component count, total length, determinism") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint64_t grid = 8 + rng() % 57;
        auto chords = gen_rejection(rng, grid, 12, true);
        const PinchResult r = pinch_grid(grid, chords);
        CHECK(r.lengths.size() == [&] {
            auto c = chords;
            for (auto& p : c)
                if (p.first > p.second) std::swap(p.first, p.second);
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            return c.size() + 1;
        }());
        std::uint64_t total = 0;
        for (auto l : r.lengths) total += l;
        CHECK(total == grid);
        const PinchResult again = pinch_grid(grid, chords);
        CHECK(r.lengths == again.lengths);
    }
}

TEST_CASE("agreement with the planar-graph oracle") {
    std::mt19937 rng(987654321);
    int systems = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const std::uint64_t grid = 4 + rng() % 61;
        const bool shared = trial % 2 == 0;
        std::vector<Pair> chords;
        if (trial % 3 == 0)
            gen_nested(rng, 0, grid, shared, 0, chords);
        else
            chords = gen_rejection(rng, grid, 2 + rng() % 14, shared);
        CAPTURE(grid);
        CAPTURE(chords.size());
        CHECK(sorted_pinch(grid, chords) ==
              taut_test::oracle_pinch(grid, chords));
        ++systems;
    }
    CHECK(systems == 1500);
}

TEST_CASE("rotation and reflection invariance") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 150; ++trial) {
        const std::uint64_t grid = 6 + rng() % 59;
        const auto chords = gen_rejection(rng, grid, 10, true);
        const auto base = sorted_pinch(grid, chords);
        const std::uint64_t r = rng() % grid;
        std::vector<Pair> rotated, reflected;
        for (const Pair& c : chords) {
            rotated.push_back({(c.first + r) % grid, (c.second + r) % grid});
            reflected.push_back({(grid - c.first) % grid,
                                 (grid - c.second) % grid});
        }
        CHECK(sorted_pinch(grid, rotated) == base);
        CHECK(sorted_pinch(grid, reflected) == base);
    }
}

TEST_CASE("boundaries partition the circle") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint64_t grid = 10 + rng() % 50;
        const auto chords = gen_rejection(rng, grid, 8, true);
        const PinchResult r = pinch_grid(grid, chords, true);
        REQUIRE(r.boundaries.size() == r.lengths.size());
        std::uint64_t arc_total = 0;
        for (std::size_t i = 0; i < r.boundaries.size(); ++i) {
            std::uint64_t mine = 0;
            for (const BoundaryItem& item : r.boundaries[i])
                if (item.kind == BoundaryItem::Kind::arc)
                    mine += item.end - item.start;
            CHECK(mine == r.lengths[i]);
            arc_total += mine;
        }
        CHECK(arc_total == grid);
    }
}

TEST_CASE("chord-level pinch agrees with the integer grid") {
    std::mt19937 rng(1357);
    const int q = 3, scale = 4;
    const std::uint64_t grid = 81;
    for (int trial = 0; trial < 50; ++trial) {
        const auto pairs = gen_rejection(rng, grid, 10, true);
        std::vector<Chord> chords;
        for (const Pair& p : pairs)
            chords.emplace_back(
                CirclePoint(q, scale, static_cast<std::int64_t>(p.first)),
                CirclePoint(q, scale, static_cast<std::int64_t>(p.second)));
        CHECK(pinch(q, scale, chords).sorted_lengths() ==
              sorted_pinch(grid, pairs));
    }
}

TEST_CASE("pinching the critical chords alone") {
    // The q-2 critical chords, endpoints approached from below, cut the
    // circle into q-2 pieces of length 1/q and one of length 2/q.
    for (int q = 3; q <= 7; ++q) {
        std::vector<Chord> cj;
        for (int j = 1; j <= q - 2; ++j)
            cj.emplace_back(CirclePoint(q, 1, j - 1, Tick::minus_eps),
                            CirclePoint(q, 1, j, Tick::minus_eps));
        const auto lens = pinch(q, 1, cj).sorted_lengths();
        std::vector<std::uint64_t> expect(q - 2, 1);
        expect.push_back(2);
        CHECK(lens == expect);
    }
}

TEST_CASE("mixed ticks order correctly") {
    // A perturbed chord nests strictly inside the exact chord with the same
    // right endpoint; the arc between the two copies of that endpoint has
    // zero length.
    std::vector<Chord> chords;
    chords.emplace_back(CirclePoint(3, 1, 0, Tick::exact),
                        CirclePoint(3, 1, 2, Tick::exact));
    chords.emplace_back(CirclePoint(3, 1, 1, Tick::minus_eps),
                        CirclePoint(3, 1, 2, Tick::minus_eps));
    const auto lens = pinch(3, 1, chords).sorted_lengths();
    CHECK(lens == std::vector<std::uint64_t>{1, 1, 1});

    // The perturbed copy of a chord links the exact original.
    std::vector<Chord> crossing;
    crossing.emplace_back(CirclePoint(3, 1, 1, Tick::exact),
                          CirclePoint(3, 1, 2, Tick::exact));
    crossing.emplace_back(CirclePoint(3, 1, 1, Tick::minus_eps),
                          CirclePoint(3, 1, 2, Tick::minus_eps));
    CHECK_THROWS_AS(pinch(3, 1, crossing), InvalidInput);
}
