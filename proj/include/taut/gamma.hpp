#pragma once

// The compressed census engine: instead of materializing trees, grow only
// the critical vein together with edge multiplicities toward the prior
// options.  Each length-(n+1) choice path stands for as many trees as the
// product of its chosen multiplicities.

#include <utility>
#include <vector>

#include "taut/bigint.hpp"
#include "taut/census_table.hpp"
#include "taut/errors.hpp"
#include "taut/fsequence.hpp"

namespace taut::treepoly {

struct GammaState {
    int q = 3;
    // l(i) = 2^{ell_exp[i]} for vein vertices i = 0..end.
    std::vector<int> ell_exp;
    // edges[i]: outgoing multiplicities of vertex i, sorted by target;
    // defined for i = 0..end-1.  Out-degree of i is (q-2) l(i) + 1.
    std::vector<std::vector<std::pair<int, BigInt>>> edges;
    // F(0..end); the extension choices are the edges at F(end).
    std::vector<int> fvals;
    int end = 1;

    BigInt out_degree(int vertex) const;
};

// Depth-1 state: l(0) = 1, l(1) = 2, edges at 0 are {0: q-2, 1: 1}.
GammaState gamma_seed(int q);

// Grow the vein by one: F(end+1) = target, consuming one edge instance at
// F(end); the new vertex end's edges double the remaining ones and add a
// single successor edge.  Throws InvalidInput on a zero-multiplicity
// target.
GammaState gamma_step(const GammaState& s, int target);

// N_q(n, m) by weighted depth-first enumeration of choice paths.
CensusTable census_trees(int q, int n);

// Number of depth-n() trees with this exact F-sequence (0 if the sequence
// is not admissible).
BigInt fsequence_weight(const FSequence& f, int q);

}  // namespace taut::treepoly
