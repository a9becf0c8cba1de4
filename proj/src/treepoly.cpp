#include "taut/treepoly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace taut::treepoly {

namespace {

bool is_leaf(const TreePolynomial& t, std::int32_t v) {
    return t.vertices[v].children.empty();
}

int vertex_depth(const TreePolynomial& t, std::int32_t v) {
    int d = 0;
    while (t.vertices[v].parent >= 0) {
        v = t.vertices[v].parent;
        ++d;
    }
    return d;
}

}  // namespace

TreePolynomial TreePolynomial::base(int q) {
    if (q < 2) throw InvalidInput("tree polynomials require degree q >= 2");
    TreePolynomial t;
    t.depth = 1;
    t.vertices.resize(q);
    Vertex& root = t.vertices[0];
    root.parent = -1;
    root.critical = true;
    root.f = 0;
    root.ell = 1;
    for (int i = 1; i < q; ++i) {
        Vertex& ch = t.vertices[i];
        ch.parent = 0;
        ch.critical = (i == 1);
        ch.f = 0;
        ch.ell = (i == 1) ? 2 : 1;
        root.children.push_back(i);
    }
    t.critical_leaf = 1;
    return t;
}

int degree(const TreePolynomial& t) {
    return static_cast<int>(t.vertices[0].children.size()) + 1;
}

std::int64_t postcritical_length(const TreePolynomial& t) {
    if (t.depth < 1) throw InvalidInput("postcritical length needs depth >= 1");
    return t.vertices[t.vertices[t.critical_leaf].f].ell;
}

int extension_count(const TreePolynomial& t) {
    return static_cast<int>(
        t.vertices[t.vertices[t.critical_leaf].f].children.size());
}

TreePolynomial extend(const TreePolynomial& t, int choice) {
    const std::int32_t c = t.critical_leaf;
    const std::int32_t fc = t.vertices[c].f;
    const auto& ext = t.vertices[fc].children;
    if (choice < 0 || choice >= static_cast<int>(ext.size()))
        throw InvalidInput("extension choice out of range");

    TreePolynomial out;
    out.depth = t.depth + 1;
    out.vertices.reserve(t.vertices.size() * 2);
    std::vector<std::int32_t> remap(t.vertices.size(), -1);

    // Clone in preorder; new leaves keep f as *old* indices, fixed up below.
    auto clone = [&](auto&& self, std::int32_t old_i,
                     std::int32_t parent) -> std::int32_t {
        const std::int32_t ni = static_cast<std::int32_t>(out.vertices.size());
        remap[old_i] = ni;
        const Vertex ov = t.vertices[old_i];
        out.vertices.push_back({parent, ov.critical, ov.f, ov.ell, {}});
        if (!ov.children.empty()) {
            for (std::int32_t ch : ov.children) {
                const std::int32_t nc = self(self, ch, ni);
                out.vertices[ni].children.push_back(nc);
            }
            return ni;
        }
        // Old leaf: grow one level.
        if (old_i == c) {
            for (int idx = 0; idx < static_cast<int>(ext.size()); ++idx) {
                const std::int32_t u = ext[idx];
                const int copies = (idx == choice) ? 1 : 2;
                for (int r = 0; r < copies; ++r) {
                    const std::int32_t wi =
                        static_cast<std::int32_t>(out.vertices.size());
                    const bool crit = (idx == choice);
                    out.vertices.push_back({ni, crit, u,
                                            crit ? 2 * t.vertices[u].ell
                                                 : t.vertices[u].ell,
                                            {}});
                    out.vertices[ni].children.push_back(wi);
                    if (crit) out.critical_leaf = wi;
                }
            }
        } else {
            for (std::int32_t u : t.vertices[ov.f].children) {
                const std::int32_t wi =
                    static_cast<std::int32_t>(out.vertices.size());
                out.vertices.push_back({ni, false, u, t.vertices[u].ell, {}});
                out.vertices[ni].children.push_back(wi);
            }
        }
        return ni;
    };
    clone(clone, 0, -1);
    for (Vertex& v : out.vertices) v.f = remap[v.f];
    return out;
}

std::vector<std::string> validate(const TreePolynomial& t) {
    std::vector<std::string> bad;
    const auto& vs = t.vertices;
    if (vs.empty()) return {"tree has no vertices"};
    auto complain = [&](const std::string& s) { bad.push_back(s); };

    // Index sanity first; bail out if references are broken.
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].f < 0 || vs[i].f >= static_cast<std::int32_t>(vs.size()))
            return {"vertex " + std::to_string(i) + " has f out of range"};
        for (std::int32_t ch : vs[i].children)
            if (ch < 0 || ch >= static_cast<std::int32_t>(vs.size()) ||
                vs[ch].parent != static_cast<std::int32_t>(i))
                return {"vertex " + std::to_string(i) + " has broken children"};
    }

    if (!vs[0].critical) complain("root is not critical");
    if (vs[0].ell != 1) complain("l(root) != 1");
    if (vs[0].f != 0) complain("f(root) != root");

    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vertex& v = vs[i];
        const std::int32_t vi = static_cast<std::int32_t>(i);
        if (v.children.empty()) {
            if (vertex_depth(t, vi) != t.depth)
                complain("leaf " + std::to_string(i) + " at wrong depth");
            continue;
        }
        int crit_children = 0;
        for (std::int32_t ch : v.children) crit_children += vs[ch].critical;
        if (v.critical && crit_children != 1)
            complain("critical vertex " + std::to_string(i) +
                     " has " + std::to_string(crit_children) +
                     " critical children");
        if (!v.critical && crit_children != 0)
            complain("ordinary vertex " + std::to_string(i) +
                     " has a critical child");
    }
    if (!vs[0].children.empty() && !vs[vs[0].children[0]].critical)
        complain("critical child of the root is not first");

    // Self-map axioms.
    for (std::size_t i = 1; i < vs.size(); ++i) {
        const Vertex& v = vs[i];
        const std::int32_t w = v.parent;
        if (w == 0) {
            if (v.f != 0) complain("child of root not mapped to root");
        } else {
            const auto& fw_children = vs[vs[w].f].children;
            if (std::find(fw_children.begin(), fw_children.end(), v.f) ==
                fw_children.end())
                complain("f(" + std::to_string(i) +
                         ") is not a child of f(parent)");
        }
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Vertex& v = vs[i];
        if (v.children.empty() || i == 0) continue;
        const auto& targets = vs[v.f].children;
        std::vector<int> image_pos;
        bool mapped = true;
        for (std::int32_t ch : v.children) {
            const auto it =
                std::find(targets.begin(), targets.end(), vs[ch].f);
            if (it == targets.end()) {
                mapped = false;
                break;
            }
            image_pos.push_back(static_cast<int>(it - targets.begin()));
        }
        if (!mapped) continue;  // already reported above
        if (!v.critical) {
            bool ok = v.children.size() == targets.size();
            for (std::size_t p = 0; ok && p < image_pos.size(); ++p)
                ok = image_pos[p] == static_cast<int>(p);
            if (!ok)
                complain("ordinary vertex " + std::to_string(i) +
                         " does not map children bijectively in order");
        } else {
            if (!std::is_sorted(image_pos.begin(), image_pos.end()))
                complain("critical vertex " + std::to_string(i) +
                         " maps children out of order");
            std::vector<int> hits(targets.size(), 0);
            for (int p : image_pos) ++hits[p];
            int singles = 0;
            bool onto = true;
            for (int h : hits) {
                if (h == 0) onto = false;
                if (h == 1) ++singles;
                if (h > 2) onto = false;
            }
            if (!onto || singles != 1)
                complain("critical vertex " + std::to_string(i) +
                         " is not 2-1 onto with a unique single");
            else
                for (std::size_t p = 0; p < v.children.size(); ++p) {
                    const std::int32_t ch = v.children[p];
                    if (hits[image_pos[p]] == 1 && !vs[ch].critical)
                        complain("unique single preimage at vertex " +
                                 std::to_string(i) + " is not critical");
                }
        }
    }

    // Length rules.
    for (std::size_t i = 1; i < vs.size(); ++i) {
        const Vertex& v = vs[i];
        const std::int64_t want =
            v.critical ? 2 * vs[v.f].ell : vs[v.f].ell;
        if (v.ell != want)
            complain("l(" + std::to_string(i) + ") = " +
                     std::to_string(v.ell) + ", expected " +
                     std::to_string(want));
    }
    return bad;
}

void enumerate_trees(int q, int depth_cap,
                     const std::function<void(const TreePolynomial&)>& visit,
                     std::uint64_t budget) {
    if (q < 2) throw InvalidInput("enumerate_trees requires q >= 2");
    if (depth_cap < 1) return;
    std::uint64_t seen = 0;
    auto rec = [&](auto&& self, const TreePolynomial& t) -> void {
        if (++seen > budget)
            throw BudgetError("tree enumeration budget of " +
                              std::to_string(budget) + " exceeded");
        visit(t);
        if (t.depth >= depth_cap) return;
        const int k = extension_count(t);
        for (int choice = 0; choice < k; ++choice)
            self(self, extend(t, choice));
    };
    rec(rec, TreePolynomial::base(q));
}

CensusTable census_explicit(int q, int n, std::uint64_t budget) {
    if (n < 0) throw InvalidInput("census_explicit requires n >= 0");
    CensusTable table(q, n);
    enumerate_trees(
        q, n + 1,
        [&](const TreePolynomial& t) {
            if (t.depth != n + 1) return;
            const std::uint64_t l =
                static_cast<std::uint64_t>(postcritical_length(t));
            if (!std::has_single_bit(l))
                throw InternalError("postcritical length is not a power of 2");
            const int m = std::countr_zero(l);
            if (m > n) throw InternalError("postcritical length exceeds 2^n");
            table.counts[m] += 1;
        },
        budget);
    return table;
}

FSequence f_sequence_of(const TreePolynomial& t) {
    // Vein indices in order, and their positions.
    std::vector<std::int32_t> vein;
    std::map<std::int32_t, int> pos;
    std::int32_t v = 0;
    for (;;) {
        pos[v] = static_cast<int>(vein.size());
        vein.push_back(v);
        std::int32_t next = -1;
        for (std::int32_t ch : t.vertices[v].children)
            if (t.vertices[ch].critical) next = ch;
        if (next < 0) break;
        v = next;
    }
    FSequence f;
    f.values.reserve(vein.size());
    for (std::int32_t ci : vein) {
        if (ci == 0) {
            f.values.push_back(0);
            continue;
        }
        std::int32_t w = t.vertices[ci].f;
        while (!t.vertices[w].critical) w = t.vertices[w].f;
        f.values.push_back(pos.at(w));
    }
    return f;
}

namespace {

struct TautTreeWalk {
    std::uint64_t budget;
    std::uint64_t seen = 0;
    std::vector<std::uint64_t> levels;

    void count(const TreePolynomial& t, int depth_cap) {
        if (++seen > budget)
            throw BudgetError("tautological tree budget exceeded");
        ++levels[t.depth - 1];
        if (t.depth >= depth_cap) return;
        for (int c = 0; c < extension_count(t); ++c)
            count(extend(t, c), depth_cap);
    }
};

}  // namespace

std::vector<std::uint64_t> tautological_tree_levels(int q, int depth,
                                                    std::uint64_t budget) {
    if (depth < 1) throw InvalidInput("tree export needs depth >= 1");
    TautTreeWalk walk{budget, 0, std::vector<std::uint64_t>(depth, 0)};
    walk.count(TreePolynomial::base(q), depth);
    return walk.levels;
}

std::string tautological_tree_dot(int q, int depth, std::uint64_t budget) {
    if (depth < 1) throw InvalidInput("tree export needs depth >= 1");
    std::ostringstream os;
    os << "graph tautological_tree {\n  node [shape=circle];\n";
    std::uint64_t next_id = 0, seen = 0;
    auto rec = [&](auto&& self, const TreePolynomial& t,
                   std::int64_t parent_id) -> void {
        if (++seen > budget)
            throw BudgetError("tautological tree budget exceeded");
        const std::uint64_t id = next_id++;
        os << "  n" << id << " [label=\"" << postcritical_length(t) << "\"];\n";
        if (parent_id >= 0) os << "  n" << parent_id << " -- n" << id << ";\n";
        if (t.depth >= depth) return;
        for (int c = 0; c < extension_count(t); ++c)
            self(self, extend(t, c), static_cast<std::int64_t>(id));
    };
    rec(rec, TreePolynomial::base(q), -1);
    os << "}\n";
    return os.str();
}

std::string tautological_tree_json(int q, int depth, std::uint64_t budget) {
    if (depth < 1) throw InvalidInput("tree export needs depth >= 1");
    std::ostringstream os;
    std::uint64_t seen = 0;
    auto rec = [&](auto&& self, const TreePolynomial& t) -> void {
        if (++seen > budget)
            throw BudgetError("tautological tree budget exceeded");
        os << "{\"ell\":" << postcritical_length(t) << ",\"children\":[";
        if (t.depth < depth) {
            for (int c = 0; c < extension_count(t); ++c) {
                if (c != 0) os << ',';
                self(self, extend(t, c));
            }
        }
        os << "]}";
    };
    rec(rec, TreePolynomial::base(q));
    return os.str();
}

}  // namespace taut::treepoly
