#pragma once

// F-sequences: the first-return itinerary of the critical vein.  The
// admissible sequences are characterized by per-index option sets; the
// options are exactly the out-edge supports of the growth digraph, so the
// set automaton here and the multiplicity bookkeeping in gamma.hpp must
// agree (tested against each other and against explicit trees).

#include <set>
#include <vector>

#include "taut/errors.hpp"

namespace taut::treepoly {

struct FSequence {
    std::vector<int> values;  // values[i] = F(i), i = 0..n

    int n() const { return static_cast<int>(values.size()) - 1; }
    bool operator==(const FSequence&) const = default;
};

// True iff the sequence can arise from a degree-q tree polynomial:
// F(0) = F(1) = 0 and every F(i+1) lies in the options of F(i).  An option
// of index i disappears when the step consumes its last edge: the successor
// option i+1 is always single, the root's self-option has multiplicity
// q-2, and every other option is backed by an even edge count.
bool check_fsequence(const FSequence& f, int q);

struct FStats {
    std::vector<int> ell_exp;     // l(i) = 2^{ell_exp[i]}
    std::vector<int> i_k;         // least index with l = 2^k; i_k[0] = 0
    std::set<int> s_indices;      // i with F(i+1) = F(i) + 1
    std::set<int> b_indices;      // the rest (0 is always here)
    std::vector<std::set<int>> options;        // options[i], i = 0..n-1
    std::vector<std::set<int>> prior_options;  // P(i) = options(i) minus i+1
};

// All derived quantities of a valid F-sequence.  Throws InvalidInput when
// check_fsequence fails.
FStats derived_stats(const FSequence& f, int q);

// Appends F(m+1) = F(m) + 1 `steps` times; the result is always admissible.
FSequence type_s_extend(const FSequence& f, int steps);

}  // namespace taut::treepoly
