#include "taut/fsequence.hpp"

#include <algorithm>

namespace taut::treepoly {

namespace {

// Runs the option automaton.  Returns false at the first violation; when
// `stats` is given, fills the option sets along the way.
bool run_options(const FSequence& f, int q, FStats* stats) {
    const int n = f.n();
    if (q < 2) throw InvalidInput("F-sequences require q >= 2");
    if (n < 1) return false;
    const auto& F = f.values;
    if (F[0] != 0 || F[1] != 0) return false;
    for (int i = 0; i <= n; ++i)
        if (F[i] < 0 || (i >= 1 && F[i] >= i)) return false;

    std::vector<std::set<int>> options(std::max(1, n));
    options[0] = {0, 1};
    for (int i = 1; i < n; ++i) {
        const int j = F[i];
        const int next = F[i + 1];
        if (options[j].count(next) == 0) return false;
        if (j == 0) {
            // The root's self-edge has multiplicity q-2, so picking 0 only
            // exhausts it in degree 3; picking 1 always does.
            options[i] = {i + 1};
            if (next == 1 || q == 3) {
                options[i].insert(1 - next);
            } else {
                options[i].insert(0);
                options[i].insert(1);
            }
        } else if (next == j + 1) {
            options[i] = options[j];
            options[i].erase(j + 1);
            options[i].insert(i + 1);
        } else {
            options[i] = options[j];
            options[i].insert(i + 1);
        }
    }
    if (stats != nullptr) stats->options = std::move(options);
    return true;
}

}  // namespace

bool check_fsequence(const FSequence& f, int q) {
    return run_options(f, q, nullptr);
}

FStats derived_stats(const FSequence& f, int q) {
    FStats st;
    if (!run_options(f, q, &st))
        throw InvalidInput("not an admissible F-sequence");
    const int n = f.n();
    const auto& F = f.values;

    st.ell_exp.resize(n + 1);
    st.ell_exp[0] = 0;
    for (int i = 1; i <= n; ++i) st.ell_exp[i] = st.ell_exp[F[i]] + 1;

    const int max_exp = *std::max_element(st.ell_exp.begin(), st.ell_exp.end());
    st.i_k.assign(max_exp + 1, -1);
    for (int i = 0; i <= n; ++i)
        if (st.i_k[st.ell_exp[i]] < 0) st.i_k[st.ell_exp[i]] = i;

    for (int i = 0; i < n; ++i) {
        if (F[i + 1] == F[i] + 1)
            st.s_indices.insert(i);
        else
            st.b_indices.insert(i);
    }

    st.prior_options = st.options;
    for (int i = 0; i < static_cast<int>(st.prior_options.size()); ++i)
        st.prior_options[i].erase(i + 1);
    return st;
}

FSequence type_s_extend(const FSequence& f, int steps) {
    if (f.values.empty()) throw InvalidInput("cannot extend an empty sequence");
    if (steps < 0) throw InvalidInput("steps must be nonnegative");
    FSequence out = f;
    for (int s = 0; s < steps; ++s)
        out.values.push_back(out.values.back() + 1);
    return out;
}

}  // namespace taut::treepoly
