#include "taut/gamma.hpp"

#include <algorithm>

namespace taut::treepoly {

namespace {

const BigInt* find_edge(const std::vector<std::pair<int, BigInt>>& edges,
                        int target) {
    for (const auto& [to, mult] : edges)
        if (to == target) return &mult;
    return nullptr;
}

// Edge list of the vertex that the step i -> i+1 creates: one edge to the
// next vein vertex plus two copies of every remaining edge instance at the
// F-image, with one instance of the chosen edge consumed.
std::vector<std::pair<int, BigInt>> grown_edges(
    const std::vector<std::pair<int, BigInt>>& at_image, int target,
    int next_vertex) {
    std::vector<std::pair<int, BigInt>> out;
    out.reserve(at_image.size() + 1);
    for (const auto& [to, mult] : at_image) {
        const BigInt m = (to == target) ? BigInt(2 * (mult - 1)) : BigInt(2 * mult);
        if (m > 0) out.emplace_back(to, m);
    }
    out.emplace_back(next_vertex, 1);
    return out;
}

}  // namespace

BigInt GammaState::out_degree(int vertex) const {
    BigInt d = 0;
    for (const auto& [to, mult] : edges.at(vertex)) d += mult;
    return d;
}

GammaState gamma_seed(int q) {
    if (q < 2) throw InvalidInput("gamma_seed requires q >= 2");
    GammaState s;
    s.q = q;
    s.ell_exp = {0, 1};
    s.edges.resize(1);
    if (q > 2) s.edges[0].emplace_back(0, q - 2);
    s.edges[0].emplace_back(1, 1);
    s.fvals = {0, 0};
    s.end = 1;
    return s;
}

GammaState gamma_step(const GammaState& s, int target) {
    const int image = s.fvals[s.end];
    const BigInt* mult = find_edge(s.edges[image], target);
    if (mult == nullptr || *mult <= 0)
        throw InvalidInput("gamma_step: target " + std::to_string(target) +
                           " has zero multiplicity");
    GammaState out = s;
    out.edges.push_back(grown_edges(s.edges[image], target, s.end + 1));
    out.ell_exp.push_back(s.ell_exp[target] + 1);
    out.fvals.push_back(target);
    out.end = s.end + 1;
    return out;
}

CensusTable census_trees(int q, int n) {
    if (q < 2) throw InvalidInput("census_trees requires q >= 2");
    if (n < 0) throw InvalidInput("census_trees requires n >= 0");
    CensusTable table(q, n);
    if (n == 0) {
        table.counts[0] = 1;  // the unique depth-1 tree
        return table;
    }
    GammaState s = gamma_seed(q);
    // Depth-first over choice paths with in-place grow/undo; edge lists of
    // settled vertices never change, so undo is three pops.
    auto dfs = [&](auto&& self, BigInt weight) -> void {
        if (s.end == n + 1) {
            const int m = s.ell_exp[s.fvals[s.end]];
            if (m > n) throw InternalError("postcritical length exceeds 2^n");
            table.counts[m] += weight;
            return;
        }
        const int image = s.fvals[s.end];
        const auto choices = s.edges[image];  // copy: s.edges grows below
        for (const auto& [target, mult] : choices) {
            s.edges.push_back(grown_edges(s.edges[image], target, s.end + 1));
            s.ell_exp.push_back(s.ell_exp[target] + 1);
            s.fvals.push_back(target);
            ++s.end;
            self(self, weight * mult);
            --s.end;
            s.fvals.pop_back();
            s.ell_exp.pop_back();
            s.edges.pop_back();
        }
    };
    dfs(dfs, 1);
    return table;
}

BigInt fsequence_weight(const FSequence& f, int q) {
    if (q < 2) throw InvalidInput("fsequence_weight requires q >= 2");
    const int n = f.n();
    if (n < 1 || f.values[0] != 0 || f.values[1] != 0) return 0;
    GammaState s = gamma_seed(q);
    BigInt weight = 1;
    for (int i = 2; i <= n; ++i) {
        const int image = s.fvals[s.end];
        const BigInt* mult = find_edge(s.edges[image], f.values[i]);
        if (mult == nullptr) return 0;
        weight *= *mult;
        s = gamma_step(s, f.values[i]);
    }
    return weight;
}

}  // namespace taut::treepoly
