#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/graph.hpp"
#include "mdim/pair_system.hpp"
#include "mdim/rational.hpp"

namespace mdim {

// Structural decomposition of a tree that is not a path: every leaf belongs
// to exactly one exterior major vertex (the first vertex of degree >= 3 on
// its inward path), and T_v collects v together with the legs to its
// terminal leaves.
struct TreeAnalysis {
    struct ExteriorMajor {
        int vertex = -1;
        std::vector<int> terminals;   // aligned with leg_lengths
        std::vector<int> leg_lengths; // sorted ascending
        VertexSet subtree;            // T_v, including v itself

        int terminal_degree() const { return static_cast<int>(terminals.size()); }
    };

    int n = 0;
    std::vector<int> leaves;
    std::vector<ExteriorMajor> exterior_majors; // ascending vertex id
    int ex1_count = 0;                          // exterior majors with ter = 1

    int sigma() const { return static_cast<int>(leaves.size()); }
};

inline TreeAnalysis analyze_tree(const Graph& g) {
    if (!is_tree(g)) throw domain_error("input is not a tree");
    if (is_path_graph(g))
        throw domain_error("tree is a path; use the path closed forms instead");

    TreeAnalysis ta;
    ta.n = g.n;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 1) ta.leaves.push_back(v);

    struct Leg {
        int terminal;
        int length;
        std::vector<int> path; // interior vertices plus the leaf, excluding the major
    };
    std::vector<std::vector<Leg>> legs_of(g.n);
    for (int leaf : ta.leaves) {
        Leg leg;
        leg.terminal = leaf;
        leg.path.push_back(leaf);
        int prev = leaf, cur = g.adj[leaf][0], dist = 1;
        while (g.degree(cur) == 2) {
            int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
            leg.path.push_back(cur);
            prev = cur;
            cur = next;
            ++dist;
        }
        leg.length = dist;
        legs_of[cur].push_back(std::move(leg)); // cur is the nearest major vertex
    }

    for (int v = 0; v < g.n; ++v) {
        if (legs_of[v].empty()) continue;
        auto& legs = legs_of[v];
        std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) {
            return a.length != b.length ? a.length < b.length : a.terminal < b.terminal;
        });
        TreeAnalysis::ExteriorMajor em;
        em.vertex = v;
        em.subtree = VertexSet(g.n);
        em.subtree.set(v);
        for (const auto& leg : legs) {
            em.terminals.push_back(leg.terminal);
            em.leg_lengths.push_back(leg.length);
            for (int u : leg.path) em.subtree.set(u);
        }
        if (em.terminal_degree() == 1) ++ta.ex1_count;
        ta.exterior_majors.push_back(std::move(em));
    }

    // subtrees of distinct exterior majors never share a vertex
    VertexSet all(g.n);
    std::size_t total = 0;
    for (const auto& em : ta.exterior_majors) {
        all |= em.subtree;
        total += em.subtree.count();
    }
    if (all.count() != total) throw lp_error("internal: overlapping tree subtrees");

    return ta;
}

// kappa of a non-path tree: the smallest leaf-to-leaf distance through a
// shared exterior major with terminal degree at least two.
inline int kappa_tree(const TreeAnalysis& ta) {
    int best = -1;
    for (const auto& em : ta.exterior_majors) {
        if (em.terminal_degree() < 2) continue;
        const int cand = em.leg_lengths[0] + em.leg_lengths[1];
        if (best < 0 || cand < best) best = cand;
    }
    if (best < 0) throw lp_error("internal: tree without a terminal-degree-2 major");
    return best;
}

// Single-exterior-major value: (a legs, shortest leg l1, k <= l1+l2).
// ka/2 up to k = 2*l1, then (a-1)k - (a-2)*l1; the two branches coincide at
// the boundary, which is asserted rather than assumed.
inline Rational spider_fkdim_value(int num_legs, int shortest_leg, const Rational& k) {
    const Rational half_span = Rational(2) * Rational(shortest_leg);
    const Rational even_branch = k * Rational(num_legs) / Rational(2);
    if (k < half_span) return even_branch;
    const Rational steep_branch =
        Rational(num_legs - 1) * k - Rational(num_legs - 2) * Rational(shortest_leg);
    if (k == half_span) {
        if (even_branch != steep_branch)
            throw lp_error("internal: spider branch mismatch at k = 2*d(v,l1)");
        return even_branch;
    }
    return steep_branch;
}

// dim_f^k of a tree with at least one exterior major vertex:
// k per terminal-degree-2 major, plus the per-subtree spider value for
// every terminal-degree->=3 major.
inline Rational fkdim_tree(const TreeAnalysis& ta, const Rational& k) {
    const int kappa = kappa_tree(ta);
    if (k < 1) throw domain_error("k must be at least 1");
    if (k > kappa) throw domain_error("k exceeds kappa=" + std::to_string(kappa));
    Rational total = 0;
    for (const auto& em : ta.exterior_majors) {
        if (em.terminal_degree() == 2)
            total += k;
        else if (em.terminal_degree() >= 3)
            total += spider_fkdim_value(em.terminal_degree(), em.leg_lengths[0], k);
    }
    return total;
}

// dim_f(T) = (sigma(T) - ex_1(T)) / 2.
inline Rational fdim_tree(const TreeAnalysis& ta) {
    return Rational(ta.sigma() - ta.ex1_count, 2);
}

} // namespace mdim
