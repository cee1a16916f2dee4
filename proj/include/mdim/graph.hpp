#pragma once

#include <algorithm>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdim/errors.hpp"

namespace mdim {

// Immutable simple undirected graph on vertices 0..n-1 with sorted
// neighbor lists. Build through make_graph / parse_edge_list, which
// reject self-loops and duplicate edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::size_t edge_count() const {
        std::size_t m = 0;
        for (const auto& nb : adj) m += nb.size();
        return m / 2;
    }
    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw domain_error("graph needs at least one vertex");
    Graph g;
    g.n = n;
    g.adj.resize(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw domain_error("edge endpoint out of range: " + std::to_string(u) + " " +
                               std::to_string(v));
        if (u == v) throw parse_error("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw parse_error("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

namespace detail {

inline bool parse_vertex_token(std::string_view t, long long& out) {
    if (t.empty() || t.size() > 9) return false;
    long long v = 0;
    for (char c : t) {
        if (c < '0' || c > '9') return false;
        v = v * 10 + (c - '0');
    }
    out = v;
    return true;
}

} // namespace detail

// Line-oriented edge list: "u v" per line, '#' comments and blank lines
// ignored. The vertex set is {0, ..., max id}; ids not mentioned stay
// isolated (and fail the connectivity check downstream).
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_id = -1;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        // strip comment and whitespace
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
        if (line.empty()) continue;

        const std::string where = "line " + std::to_string(line_no) + ": \"" + std::string(line) + "\"";
        long long ids[2];
        std::size_t tok = 0, i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            if (i >= line.size()) break;
            std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            std::string_view t = line.substr(start, i - start);
            if (tok >= 2) throw parse_error("expected two vertex ids, " + where);
            if (!detail::parse_vertex_token(t, ids[tok]))
                throw parse_error("non-integer token, " + where);
            ++tok;
        }
        if (tok != 2) throw parse_error("expected two vertex ids, " + where);
        if (ids[0] == ids[1]) throw parse_error("self-loop, " + where);
        max_id = std::max({max_id, static_cast<int>(ids[0]), static_cast<int>(ids[1])});
        edges.emplace_back(static_cast<int>(ids[0]), static_cast<int>(ids[1]));
    }
    if (edges.empty()) throw parse_error("empty edge list");

    // duplicate detection with line-agnostic normalization
    auto canon = edges;
    for (auto& e : canon)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(canon.begin(), canon.end());
    if (auto it = std::adjacent_find(canon.begin(), canon.end()); it != canon.end())
        throw parse_error("duplicate edge " + std::to_string(it->first) + " " +
                          std::to_string(it->second));
    return make_graph(max_id + 1, edges);
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == g.n;
}

// All-pairs hop distances, stored dense. Valid only for connected graphs.
struct DistanceMatrix {
    int n = 0;
    std::vector<int> d; // row-major n*n

    int at(int u, int v) const { return d[static_cast<std::size_t>(u) * n + v]; }
    int& at(int u, int v) { return d[static_cast<std::size_t>(u) * n + v]; }
    int diameter() const { return *std::max_element(d.begin(), d.end()); }
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    if (!is_connected(g)) throw domain_error("graph is not connected");
    DistanceMatrix dm;
    dm.n = g.n;
    dm.d.assign(static_cast<std::size_t>(g.n) * g.n, -1);
    std::vector<int> queue(g.n);
    for (int s = 0; s < g.n; ++s) {
        int head = 0, tail = 0;
        queue[tail++] = s;
        dm.at(s, s) = 0;
        while (head < tail) {
            int v = queue[head++];
            int dv = dm.at(s, v);
            for (int w : g.adj[v])
                if (dm.at(s, w) < 0) {
                    dm.at(s, w) = dv + 1;
                    queue[tail++] = w;
                }
        }
    }
    return dm;
}

inline bool is_path_graph(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.edge_count() != static_cast<std::size_t>(g.n) - 1) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == static_cast<std::size_t>(g.n) - 1;
}

} // namespace mdim
