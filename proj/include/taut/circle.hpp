#pragma once

// Exact points on the unit circle at scale q^d, with a symbolic
// "approached from below" marker, and chords (laminations leaves) built
// from them.  The normalized critical data of the lamination construction
// places points at grid positions minus an infinitesimal whose magnitude
// shrinks with the digit depth of the point; comparisons encode that as
// (effective grid value, tick rank) with finer-scale perturbed points
// sitting closer to their grid value.

#include <compare>
#include <cstdint>
#include <vector>

#include "taut/errors.hpp"

namespace taut::lamination {

enum class Tick : std::uint8_t { minus_eps = 0, exact = 1 };

struct CirclePoint {
    int q = 2;
    int scale = 0;            // the point lives on the q^scale grid
    std::int64_t num = 0;     // in [0, q^scale)
    Tick tick = Tick::exact;

    CirclePoint() = default;
    CirclePoint(int q_, int scale_, std::int64_t num_, Tick tick_ = Tick::exact);

    // Point at 0.d1 d2 ... dk in base q (so scale = digits.size()).
    static CirclePoint from_digits(int q, const std::vector<int>& digits,
                                   Tick tick = Tick::exact);
};

// Total order on points of a common circle.  A minus_eps point with num
// zero wraps to just below 1.  Among minus_eps points with equal grid
// value, the finer-scale point is larger (its perturbation is smaller);
// exact points are larger than any perturbed point at the same value.
std::strong_ordering compare(const CirclePoint& a, const CirclePoint& b);

inline bool operator==(const CirclePoint& a, const CirclePoint& b) {
    return compare(a, b) == std::strong_ordering::equal;
}
inline bool operator<(const CirclePoint& a, const CirclePoint& b) {
    return compare(a, b) == std::strong_ordering::less;
}

// A lamination leaf: an unordered pair of distinct points plus the depth
// and type metadata of the construction.
struct Chord {
    CirclePoint a, b;   // stored with a < b
    int depth = 1;
    int leaf_type = 1;  // j in [1, q-2]

    Chord() = default;
    Chord(CirclePoint a_, CirclePoint b_, int depth_ = 1, int leaf_type_ = 1);
};

// True iff the chords are disjoint (no shared endpoint) and each separates
// the other: exactly one endpoint of c2 lies in one of the two open arcs
// cut by c1.
bool links(const Chord& c1, const Chord& c2);

}  // namespace taut::lamination
