#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"
#include "mdim/graph.hpp"

namespace mdim {

using VertexSet = boost::dynamic_bitset<>;

inline std::vector<int> to_vertex_list(const VertexSet& s) {
    std::vector<int> out;
    out.reserve(s.count());
    for (auto b = s.find_first(); b != VertexSet::npos; b = s.find_next(b))
        out.push_back(static_cast<int>(b));
    return out;
}

// R{x,y} = { z : d(x,z) != d(y,z) }. Always contains both x and y.
inline VertexSet resolving_set_of_pair(const DistanceMatrix& dm, int x, int y) {
    if (x == y) throw domain_error("resolving set needs two distinct vertices");
    VertexSet r(dm.n);
    for (int z = 0; z < dm.n; ++z)
        if (dm.at(x, z) != dm.at(y, z)) r.set(z);
    return r;
}

// One resolving set per unordered vertex pair {x,y}, x < y, in lexicographic
// pair order, plus kappa = the minimum cardinality over all of them.
struct PairSystem {
    int n = 0;
    std::vector<VertexSet> rsets;
    int kappa = 0;

    static std::size_t pair_index(int x, int y, int n) {
        // x < y required
        return static_cast<std::size_t>(x) * n - static_cast<std::size_t>(x) * (x + 1) / 2 +
               (y - x - 1);
    }
    std::size_t pair_count() const { return rsets.size(); }
    std::pair<int, int> pair_of(std::size_t index) const {
        std::size_t idx = index;
        for (int x = 0; x < n - 1; ++x) {
            std::size_t row = static_cast<std::size_t>(n - 1 - x);
            if (idx < row) return {x, x + 1 + static_cast<int>(idx)};
            idx -= row;
        }
        throw domain_error("pair index out of range");
    }
    const VertexSet& rset(int x, int y) const {
        if (x > y) std::swap(x, y);
        return rsets[pair_index(x, y, n)];
    }
};

inline PairSystem pair_system(const Graph& g) {
    if (g.n < 2) throw domain_error("pair system undefined for fewer than 2 vertices");
    DistanceMatrix dm = all_pairs_distances(g); // rejects disconnected input
    PairSystem ps;
    ps.n = g.n;
    ps.rsets.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
    std::size_t min_card = static_cast<std::size_t>(g.n) + 1;
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            ps.rsets.push_back(resolving_set_of_pair(dm, x, y));
            min_card = std::min(min_card, ps.rsets.back().count());
        }
    ps.kappa = static_cast<int>(min_card);
    return ps;
}

// Union of the R{x,y} that attain |R{x,y}| = kappa.
inline VertexSet r_kappa_union(const PairSystem& ps) {
    VertexSet u(ps.n);
    for (const auto& r : ps.rsets)
        if (r.count() == static_cast<std::size_t>(ps.kappa)) u |= r;
    return u;
}

// Pairs {x,y} with N(x)-{y} = N(y)-{x}, covering adjacent and non-adjacent twins.
inline std::vector<std::pair<int, int>> twin_pairs(const Graph& g) {
    std::vector<VertexSet> rows(g.n, VertexSet(g.n));
    for (int v = 0; v < g.n; ++v)
        for (int w : g.adj[v]) rows[v].set(w);
    std::vector<std::pair<int, int>> twins;
    VertexSet a(g.n), b(g.n);
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y) {
            a = rows[x];
            a.reset(x).reset(y);
            b = rows[y];
            b.reset(x).reset(y);
            if (a == b) twins.emplace_back(x, y);
        }
    return twins;
}

} // namespace mdim
