#pragma once

// Deterministic SVG pictures of laminations: the unit circle with each
// chord drawn either as the circular arc meeting the boundary at right
// angles or as a straight segment.  Cosmetic output; the census never
// depends on it.

#include <cstdint>
#include <string>

#include "taut/lamination.hpp"

namespace taut::lamination {

enum class ChordStyle { geodesic, straight };

struct RenderOptions {
    ChordStyle style = ChordStyle::geodesic;
    int size_px = 800;
    std::uint64_t max_chords = 100'000;
};

// `result` may be null; when given (with boundaries), circle arcs are
// tinted by the component they belong to.
std::string render_svg(const Lamination& lam, const PinchResult* result,
                       const RenderOptions& opts = {});

}  // namespace taut::lamination
