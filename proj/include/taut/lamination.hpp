#pragma once

// The normalized tautological lamination in degree q.  Depth-n leaves are
// indexed by base-q words x = (q-2) x_1 ... x_{n-1} (j-1); the partner word
// y is fixed digitwise from the right by an unlinking rule against the
// chord {x, z} (z is x with first digit q-1).  Pinching all leaves of depth
// at most n yields the exact length census N_q(n,m).

#include <cstdint>
#include <vector>

#include "taut/census_table.hpp"
#include "taut/circle.hpp"
#include "taut/errors.hpp"
#include "taut/pinch.hpp"

namespace taut::lamination {

struct Lamination {
    int q = 3;
    int depth = 0;
    std::vector<Chord> chords;  // all depths 1..depth, grouped by depth
};

struct LaminationOptions {
    std::uint64_t chord_cap = 10'000'000;
    // Pairwise unlink validation: exhaustive O(L^2) up to this many chords,
    // random sampling above.
    std::size_t full_unlink_check_max = 2000;
    std::size_t sampled_unlink_checks = 20000;
    bool validate = true;
    int shards = 1;
};

struct CensusOptions {
    int shards = 1;
};

// The q^{n-1}(q-2) depth-n leaves, endpoints exact on the q^n grid, ordered
// by (type j, word).  Requires q >= 3, n >= 1.
std::vector<Chord> depth_leaves(int q, int n);

// Union of depth_leaves(q, k) for k = 1..n (empty for q = 2).
Lamination build_lamination(int q, int n, const LaminationOptions& opts = {});

// Depth-n leaves whose endpoints differ by exactly one grid unit.
std::vector<Chord> short_leaves(int q, int n);

// Pinch the depth-<=n lamination at scale n and bucket component lengths
// by the power of two: counts[m] components of length 2^m q^-n.  Works for
// q = 2 as well (empty lamination, single component with m = n).
CensusTable census(int q, int n, const CensusOptions& opts = {});

// Number of leaves of depth exactly k, i.e. q^{k-1}(q-2).
std::uint64_t depth_leaf_count(int q, int k);
// Total leaves of depth <= n.
std::uint64_t total_leaf_count(int q, int n);

}  // namespace taut::lamination
