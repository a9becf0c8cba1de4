#include "taut/pinch.hpp"

#include <algorithm>
#include <limits>

namespace taut::lamination {

namespace {

using ChordPair = std::pair<std::uint64_t, std::uint64_t>;

// Validate, order each pair, sort by (open asc, close desc), collapse
// duplicates (the input is a set of chords).
void canonicalize(std::vector<ChordPair>& chords, std::uint64_t end_position) {
    for (auto& [a, b] : chords) {
        if (a >= end_position || b >= end_position)
            throw InvalidInput("pinch endpoint off the grid");
        if (a == b) throw InvalidInput("pinch chord with equal endpoints");
        if (a > b) std::swap(a, b);
    }
    std::sort(chords.begin(), chords.end(),
              [](const ChordPair& x, const ChordPair& y) {
                  return x.first != y.first ? x.first < y.first
                                            : x.second > y.second;
              });
    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
}

// Same traversal as detail::sweep_faces but recording component boundaries.
// `eff_of` maps a sweep position to its coordinate in grid units.
template <typename Eff>
void boundary_sweep(std::uint64_t end_position,
                    const std::vector<ChordPair>& openers, Eff&& eff_of,
                    PinchResult& out) {
    struct Open {
        std::uint64_t close;
        std::uint64_t acc;
        std::size_t chord;
        std::vector<BoundaryItem> items;
    };
    std::vector<Open> stack;
    stack.push_back(
        {end_position, 0, std::numeric_limits<std::size_t>::max(), {}});
    std::size_t io = 0;
    std::uint64_t cursor = 0;
    auto emit = [&](Open& f) {
        out.lengths.push_back(f.acc);
        out.boundaries.push_back(std::move(f.items));
    };
    for (;;) {
        std::uint64_t nxt = stack.back().close;
        if (io < openers.size() && openers[io].first < nxt)
            nxt = openers[io].first;
        if (nxt > cursor) {
            const std::uint64_t len = eff_of(nxt) - eff_of(cursor);
            stack.back().acc += len;
            if (len > 0)
                stack.back().items.push_back({BoundaryItem::Kind::arc,
                                              eff_of(cursor), eff_of(nxt), 0,
                                              false});
            cursor = nxt;
        }
        if (nxt == end_position && io >= openers.size()) break;
        while (stack.size() > 1 && stack.back().close == nxt) {
            Open f = std::move(stack.back());
            stack.pop_back();
            f.items.push_back(
                {BoundaryItem::Kind::chord_side, 0, 0, f.chord, true});
            stack.back().items.push_back(
                {BoundaryItem::Kind::chord_side, 0, 0, f.chord, false});
            emit(f);
        }
        while (io < openers.size() && openers[io].first == nxt) {
            if (openers[io].second > stack.back().close)
                throw InvalidInput("pinch input contains linked chords");
            stack.push_back({openers[io].second, 0, io, {}});
            ++io;
        }
    }
    if (stack.size() != 1)
        throw InternalError("pinch sweep finished with open faces");
    emit(stack.back());
}

}  // namespace

std::vector<std::uint64_t> PinchResult::sorted_lengths() const {
    std::vector<std::uint64_t> v = lengths;
    std::sort(v.begin(), v.end());
    return v;
}

PinchResult pinch_grid(std::uint64_t grid, std::vector<ChordPair> chords,
                       bool keep_boundaries) {
    if (grid == 0) throw InvalidInput("pinch grid must be positive");
    canonicalize(chords, grid);

    PinchResult out;
    out.grid = grid;
    out.lengths.reserve(chords.size() + 1);
    if (keep_boundaries) {
        boundary_sweep(
            grid, chords, [](std::uint64_t p) { return p; }, out);
    } else {
        detail::sweep_faces<std::uint64_t>(
            grid, chords,
            [](std::uint64_t a, std::uint64_t b) { return b - a; },
            [&](std::uint64_t len) { out.lengths.push_back(len); });
    }
    return out;
}

PinchResult pinch(int q, int scale, const std::vector<Chord>& chords,
                  bool keep_boundaries) {
    if (q < 2) throw InvalidInput("pinch requires q >= 2");
    if (scale < 0) throw InvalidInput("pinch scale must be nonnegative");
    std::uint64_t grid = 1;
    for (int i = 0; i < scale; ++i) {
        if (grid > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(q))
            throw InvalidInput("q^scale exceeds the 64-bit grid limit");
        grid *= static_cast<std::uint64_t>(q);
    }

    // Symbolic position of each endpoint: (effective value, tick rank).  A
    // minus_eps point at numerator 0 wraps to just below the full circle;
    // among perturbed points with equal value the finer scale sits higher.
    struct Key {
        std::uint64_t eff;
        std::int64_t rank;
        bool operator<(const Key& o) const {
            return eff != o.eff ? eff < o.eff : rank < o.rank;
        }
        bool operator==(const Key& o) const = default;
    };
    auto key_of = [&](const CirclePoint& p) -> Key {
        if (p.q != q) throw InvalidInput("chord endpoint of different degree");
        if (p.scale > scale)
            throw InvalidInput("pinch endpoint off the q^scale grid");
        std::uint64_t factor = 1;
        for (int i = p.scale; i < scale; ++i)
            factor *= static_cast<std::uint64_t>(q);
        if (p.tick == Tick::exact)
            return {static_cast<std::uint64_t>(p.num) * factor,
                    std::numeric_limits<std::int64_t>::max()};
        if (p.num == 0) return {grid, p.scale};
        return {static_cast<std::uint64_t>(p.num) * factor, p.scale};
    };

    std::vector<Key> keys;
    keys.reserve(chords.size() * 2);
    for (const Chord& c : chords) {
        keys.push_back(key_of(c.a));
        keys.push_back(key_of(c.b));
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    // Sweep positions: 0 is the circle origin, 1..P the distinct endpoint
    // keys in circular order, P+1 the far end of the circle.
    const std::uint64_t positions = keys.size();
    auto eff_of = [&](std::uint64_t ord) -> std::uint64_t {
        if (ord == 0) return 0;
        if (ord == positions + 1) return grid;
        return keys[ord - 1].eff;
    };
    auto ordinal = [&](const CirclePoint& p) -> std::uint64_t {
        const Key k = key_of(p);
        return 1 + static_cast<std::uint64_t>(
                       std::lower_bound(keys.begin(), keys.end(), k) -
                       keys.begin());
    };

    std::vector<ChordPair> pairs;
    pairs.reserve(chords.size());
    for (const Chord& c : chords) pairs.push_back({ordinal(c.a), ordinal(c.b)});
    canonicalize(pairs, positions + 1);

    PinchResult out;
    out.grid = grid;
    out.lengths.reserve(pairs.size() + 1);
    if (keep_boundaries) {
        boundary_sweep(positions + 1, pairs, eff_of, out);
    } else {
        detail::sweep_faces<std::uint64_t>(
            positions + 1, pairs,
            [&](std::uint64_t a, std::uint64_t b) {
                return eff_of(b) - eff_of(a);
            },
            [&](std::uint64_t len) { out.lengths.push_back(len); });
    }
    return out;
}

}  // namespace taut::lamination
