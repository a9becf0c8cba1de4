#include "taut/circle.hpp"

#include <limits>
#include <tuple>

#include "taut/bigint.hpp"

namespace taut::lamination {

namespace {

// Keep q^scale well inside int64 so rescaled values never overflow.
std::int64_t grid_size_checked(int q, int scale) {
    if (q < 2) throw InvalidInput("circle points require q >= 2");
    if (scale < 0) throw InvalidInput("scale must be nonnegative");
    std::int64_t g = 1;
    for (int i = 0; i < scale; ++i) {
        if (g > (std::int64_t{1} << 62) / q)
            throw InvalidInput("q^scale exceeds the 64-bit grid limit");
        g *= q;
    }
    return g;
}

// Sort key at a common scale D >= point scale: (effective value, tick rank).
// The rank orders equal-value points: minus_eps points by their own scale,
// exact points last.
std::pair<std::int64_t, std::int64_t> key_at(const CirclePoint& p,
                                             std::int64_t common_grid,
                                             std::int64_t own_grid) {
    std::int64_t v = p.num * (common_grid / own_grid);
    if (p.tick == Tick::exact)
        return {v, std::numeric_limits<std::int64_t>::max()};
    if (p.num == 0) v = common_grid;  // 0 approached from below wraps to 1^-
    return {v, p.scale};
}

}  // namespace

CirclePoint::CirclePoint(int q_, int scale_, std::int64_t num_, Tick tick_)
    : q(q_), scale(scale_), num(num_), tick(tick_) {
    const std::int64_t grid = grid_size_checked(q, scale);
    if (num < 0 || num >= grid)
        throw InvalidInput("numerator out of range [0, q^scale)");
}

CirclePoint CirclePoint::from_digits(int q, const std::vector<int>& digits,
                                     Tick tick) {
    std::int64_t v = 0;
    for (int d : digits) {
        if (d < 0 || d >= q) throw InvalidInput("digit out of range [0, q)");
        v = v * q + d;
    }
    return CirclePoint(q, static_cast<int>(digits.size()), v, tick);
}

std::strong_ordering compare(const CirclePoint& a, const CirclePoint& b) {
    if (a.q != b.q) throw InvalidInput("comparing points of different degree");
    const int common_scale = a.scale > b.scale ? a.scale : b.scale;
    const std::int64_t common = grid_size_checked(a.q, common_scale);
    const auto ka = key_at(a, common, grid_size_checked(a.q, a.scale));
    const auto kb = key_at(b, common, grid_size_checked(b.q, b.scale));
    if (ka.first != kb.first)
        return ka.first < kb.first ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    if (ka.second != kb.second)
        return ka.second < kb.second ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Chord::Chord(CirclePoint a_, CirclePoint b_, int depth_, int leaf_type_)
    : a(a_), b(b_), depth(depth_), leaf_type(leaf_type_) {
    if (a.q != b.q) throw InvalidInput("chord endpoints of different degree");
    if (compare(a, b) == std::strong_ordering::equal)
        throw InvalidInput("chord endpoints must be distinct");
    if (compare(b, a) == std::strong_ordering::less) std::swap(a, b);
}

bool links(const Chord& c1, const Chord& c2) {
    if (c1.a.q != c2.a.q)
        throw InvalidInput("linking test requires chords of a common circle");
    // Any shared endpoint means the leaves are not disjoint, hence unlinked.
    for (const CirclePoint* p : {&c2.a, &c2.b})
        if (*p == c1.a || *p == c1.b) return false;
    const bool a_inside = c1.a < c2.a && c2.a < c1.b;
    const bool b_inside = c1.a < c2.b && c2.b < c1.b;
    return a_inside != b_inside;
}

}  // namespace taut::lamination
