#pragma once

// Pinching a circle along a finite set of pairwise-unlinked chords:
// quotient each chord to a point and split the resulting cactus into its
// circles.  Computed as a single sweep over sorted chord endpoints with a
// stack of open faces; chords may share endpoints (chains), and the
// traversal resolves coincident chord ends by nesting order.

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "taut/circle.hpp"
#include "taut/errors.hpp"

namespace taut::lamination {

struct BoundaryItem {
    enum class Kind : std::uint8_t { arc, chord_side };
    Kind kind = Kind::arc;
    // arc: the closed span [start, end] of grid positions (end - start is its
    // length); chord_side: index of the chord in the canonical sorted order,
    // inner = true on the nested side.
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    std::size_t chord = 0;
    bool inner = false;
};

struct PinchResult {
    std::uint64_t grid = 1;  // lengths are in units of 1/grid
    // One entry per component, innermost-first traversal order with the
    // outermost component last.  Zero lengths can only come from degenerate
    // inputs (chords whose endpoint graph contains a cycle).
    std::vector<std::uint64_t> lengths;
    // Parallel to lengths when boundaries were requested, else empty.
    std::vector<std::vector<BoundaryItem>> boundaries;

    std::vector<std::uint64_t> sorted_lengths() const;
};

// Pinch on a plain integer grid: positions in [0, grid).  Chord endpoint
// pairs need not be ordered; duplicated chords are collapsed (the input is
// a set).  Throws InvalidInput on linked chords or off-grid endpoints.
PinchResult pinch_grid(std::uint64_t grid,
                       std::vector<std::pair<std::uint64_t, std::uint64_t>> chords,
                       bool keep_boundaries = false);

// Pinch chords whose endpoints live on the q^scale grid.  Endpoints may
// carry minus_eps ticks; perturbed positions are ordered symbolically and
// contribute zero length, so component lengths stay exact multiples of
// q^-scale.
PinchResult pinch(int q, int scale, const std::vector<Chord>& chords,
                  bool keep_boundaries = false);

namespace detail {

// Streaming sweep over openers sorted by (first, second descending), with
// first < second.  Calls on_face(length) for every component, outermost
// last.  The arc between consecutive positions p < p' has length
// eff(p') - eff(p) given by `measure`; for plain grids this is p' - p.
// `Openers` is any random-access range of pair-like (open, close) values,
// which lets the census engine store its chords in a packed form.
template <typename I, typename Openers, typename Measure, typename FaceSink>
void sweep_faces(I end_position, const Openers& openers, Measure&& measure,
                 FaceSink&& on_face) {
    struct Open {
        I close;
        std::uint64_t acc;
    };
    std::vector<Open> stack;
    stack.push_back({end_position, 0});
    std::size_t io = 0;
    const std::size_t total = openers.size();
    I cursor = 0;
    for (;;) {
        I nxt = stack.back().close;
        if (io < total) {
            const auto ev = openers[io];
            if (ev.first < nxt) nxt = ev.first;
        }
        if (nxt > cursor) {
            stack.back().acc += measure(cursor, nxt);
            cursor = nxt;
        }
        if (nxt == end_position && io >= total) break;
        while (stack.size() > 1 && stack.back().close == nxt) {
            on_face(stack.back().acc);
            stack.pop_back();
        }
        while (io < total) {
            const auto ev = openers[io];
            if (ev.first != nxt) break;
            if (ev.second > stack.back().close)
                throw InvalidInput("pinch input contains linked chords");
            stack.push_back({static_cast<I>(ev.second), 0});
            ++io;
        }
    }
    if (stack.size() != 1)
        throw InternalError("pinch sweep finished with open faces");
    on_face(stack.back().acc);
}

}  // namespace detail

}  // namespace taut::lamination
