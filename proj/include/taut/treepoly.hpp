#pragma once

// Tree polynomials: rooted planar trees with a critical chain, a simplicial
// self-map f and a length function, abstracting the combinatorics that the
// lamination census counts.  Depth-(n+1) trees of degree q with
// postcritical length 2^m are counted by N_q(n,m), which gives the second,
// independent census engine.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "taut/census_table.hpp"
#include "taut/errors.hpp"
#include "taut/fsequence.hpp"

namespace taut::treepoly {

inline constexpr std::uint64_t kDefaultTreeBudget = 1'000'000;

struct Vertex {
    std::int32_t parent = -1;
    bool critical = false;
    std::int32_t f = 0;  // image under the self-map
    std::int64_t ell = 1;
    std::vector<std::int32_t> children;
};

struct TreePolynomial {
    int depth = 0;
    std::vector<Vertex> vertices;  // preorder, root at index 0
    std::int32_t critical_leaf = 0;

    // The unique depth-1 tree of degree q: root plus one critical child of
    // length 2 and q-2 ordinary children of length 1.
    static TreePolynomial base(int q);
};

// All axiom checks; an empty result means the tree is valid.  Violations
// are data, not exceptions.
std::vector<std::string> validate(const TreePolynomial& t);

// Number of children of the root, plus one.
int degree(const TreePolynomial& t);

// l(f(c)) for the critical leaf c; always a power of two.
std::int64_t postcritical_length(const TreePolynomial& t);

// Extensions of t are in bijection with the children of f(critical leaf);
// there are (q-2) l(T) + 1 of them.
int extension_count(const TreePolynomial& t);
TreePolynomial extend(const TreePolynomial& t, int choice);

// Streams every tree of depth 1..depth_cap exactly once, depth-first in
// extension-choice order.
void enumerate_trees(int q, int depth_cap,
                     const std::function<void(const TreePolynomial&)>& visit,
                     std::uint64_t budget = kDefaultTreeBudget);

// N_q(n, m) by explicit enumeration of depth-(n+1) trees; the slow oracle.
CensusTable census_explicit(int q, int n,
                            std::uint64_t budget = kDefaultTreeBudget);

// First-return itinerary along the critical vein.
FSequence f_sequence_of(const TreePolynomial& t);

// The tree of extensions itself: vertices at level d are the degree-q trees
// of depth d+1, children are extensions, labels are postcritical lengths.
std::string tautological_tree_dot(int q, int depth,
                                  std::uint64_t budget = kDefaultTreeBudget);
std::string tautological_tree_json(int q, int depth,
                                   std::uint64_t budget = kDefaultTreeBudget);
std::vector<std::uint64_t> tautological_tree_levels(
    int q, int depth, std::uint64_t budget = kDefaultTreeBudget);

}  // namespace taut::treepoly
