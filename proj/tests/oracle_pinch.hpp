#pragma once

// Test-only oracle for pinch: build the planar graph of circle arcs plus
// chords explicitly, with a counterclockwise rotation system at every
// vertex, and extract faces by orbit traversal.  Completely independent of
// the sweep implementation it checks.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "taut/errors.hpp"

namespace taut_test {

inline std::vector<std::uint64_t> oracle_pinch(
    std::uint64_t grid,
    std::vector<std::pair<std::uint64_t, std::uint64_t>> chords) {
    using taut::InternalError;
    for (auto& c : chords) {
        if (c.first >= grid || c.second >= grid || c.first == c.second)
            throw InternalError("oracle: bad chord");
        if (c.first > c.second) std::swap(c.first, c.second);
    }
    std::sort(chords.begin(), chords.end());
    chords.erase(std::unique(chords.begin(), chords.end()), chords.end());
    if (chords.empty()) return {grid};

    std::vector<std::uint64_t> pos;
    for (const auto& c : chords) {
        pos.push_back(c.first);
        pos.push_back(c.second);
    }
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    const std::size_t P = pos.size();
    const std::size_t C = chords.size();
    auto vertex_of = [&](std::uint64_t p) {
        return static_cast<std::size_t>(
            std::lower_bound(pos.begin(), pos.end(), p) - pos.begin());
    };

    // Edges 0..P-1 are arcs (arc i joins vertex i to i+1 mod P); edges
    // P..P+C-1 are chords.  Half-edge 2e is edge e from its first vertex,
    // 2e+1 the reverse.
    const std::size_t E = P + C;
    std::vector<std::size_t> tail(2 * E), head(2 * E);
    std::vector<std::uint64_t> arc_len(E, 0);
    for (std::size_t i = 0; i < P; ++i) {
        const std::size_t j = (i + 1) % P;
        tail[2 * i] = i;
        head[2 * i] = j;
        tail[2 * i + 1] = j;
        head[2 * i + 1] = i;
        arc_len[i] = (i + 1 < P) ? pos[j] - pos[i] : grid - pos[i] + pos[0];
    }
    for (std::size_t c = 0; c < C; ++c) {
        const std::size_t e = P + c;
        tail[2 * e] = vertex_of(chords[c].first);
        head[2 * e] = vertex_of(chords[c].second);
        tail[2 * e + 1] = head[2 * e];
        head[2 * e + 1] = tail[2 * e];
    }

    // Counterclockwise rotation at v: the arc leaving forward, then chord
    // ends ordered by the ccw distance to their partner, then the arc
    // leaving backward.
    std::vector<std::vector<std::size_t>> rot(P);
    for (std::size_t v = 0; v < P; ++v) rot[v].push_back(2 * v);
    std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> at(P);
    for (std::size_t c = 0; c < C; ++c) {
        const std::size_t e = P + c;
        for (int side = 0; side < 2; ++side) {
            const std::size_t he = 2 * e + side;
            const std::uint64_t from = side == 0 ? chords[c].first
                                                 : chords[c].second;
            const std::uint64_t to = side == 0 ? chords[c].second
                                               : chords[c].first;
            const std::uint64_t delta = (to + grid - from) % grid;
            at[tail[he]].push_back({delta, he});
        }
    }
    for (std::size_t v = 0; v < P; ++v) {
        std::sort(at[v].begin(), at[v].end());
        for (const auto& [delta, he] : at[v]) rot[v].push_back(he);
        rot[v].push_back(2 * ((v + P - 1) % P) + 1);
    }
    std::vector<std::size_t> rank(2 * E);
    for (std::size_t v = 0; v < P; ++v)
        for (std::size_t i = 0; i < rot[v].size(); ++i) rank[rot[v][i]] = i;

    // Faces to the left: successor of h is the rotation predecessor of
    // twin(h) at its tail.
    auto next_he = [&](std::size_t h) {
        const std::size_t t = h ^ 1;
        const std::size_t v = tail[t];
        const std::size_t i = rank[t];
        return rot[v][(i + rot[v].size() - 1) % rot[v].size()];
    };

    std::vector<char> seen(2 * E, 0);
    std::vector<std::uint64_t> lengths;
    std::size_t outer_face = static_cast<std::size_t>(-1);
    for (std::size_t h0 = 0; h0 < 2 * E; ++h0) {
        if (seen[h0]) continue;
        std::uint64_t len = 0;
        bool is_outer = false;
        std::size_t h = h0;
        do {
            seen[h] = 1;
            if ((h >> 1) < P) {
                len += arc_len[h >> 1];
                if (h & 1) is_outer = true;  // reversed arc: outside
            }
            h = next_he(h);
        } while (h != h0);
        if (is_outer) {
            if (outer_face != static_cast<std::size_t>(-1))
                throw InternalError("oracle: two outer faces");
            outer_face = lengths.size();
            lengths.push_back(len);
        } else {
            lengths.push_back(len);
        }
    }
    if (outer_face == static_cast<std::size_t>(-1))
        throw InternalError("oracle: no outer face");
    if (lengths[outer_face] != grid)
        throw InternalError("oracle: outer face has wrong length");
    lengths.erase(lengths.begin() + static_cast<std::ptrdiff_t>(outer_face));
    if (lengths.size() != C + 1)
        throw InternalError("oracle: face count is off");
    std::uint64_t total = 0;
    for (auto l : lengths) total += l;
    if (total != grid) throw InternalError("oracle: lengths do not add up");
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace taut_test
