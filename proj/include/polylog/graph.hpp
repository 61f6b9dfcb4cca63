#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polylog {

// Raised by file-format readers; carries the 1-based offending line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph in adjacency-list form. Vertices are dense indices
// 0..n-1; edges are stored as (u,v) pairs with u<v, sorted lexicographically,
// and the edge index doubles as the default total edge order.
struct graph {
    int n = 0;
    std::vector<std::vector<int>> adj;         // sorted neighbor lists
    std::vector<std::vector<int>> adj_edge;    // adj_edge[v][i] = edge id of (v, adj[v][i])
    std::vector<std::pair<int, int>> edges;    // u < v, lexicographic order
    int max_degree = 0;
    int min_degree = 0;

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    static graph from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
        graph g;
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        g.n = n;
        for (auto& [u, v] : edge_list) {
            if (u == v) throw std::invalid_argument("graph: self-loop");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("graph: vertex index out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edge_list.begin(), edge_list.end());
        if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
            throw std::invalid_argument("graph: duplicate edge");
        g.edges = std::move(edge_list);
        g.adj.assign(n, {});
        g.adj_edge.assign(n, {});
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.edges[e];
            g.adj[u].push_back(v);
            g.adj_edge[u].push_back(e);
            g.adj[v].push_back(u);
            g.adj_edge[v].push_back(e);
        }
        // adjacency built from sorted edges is already sorted for u-side
        // entries but not for v-side ones; sort both in lockstep
        for (int v = 0; v < n; ++v) {
            std::vector<int> idx(g.adj[v].size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(),
                      [&](int a, int b) { return g.adj[v][a] < g.adj[v][b]; });
            std::vector<int> na(idx.size()), ne(idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i) {
                na[i] = g.adj[v][idx[i]];
                ne[i] = g.adj_edge[v][idx[i]];
            }
            g.adj[v] = std::move(na);
            g.adj_edge[v] = std::move(ne);
        }
        g.max_degree = 0;
        g.min_degree = n > 0 ? g.n : 0;
        for (int v = 0; v < n; ++v) {
            g.max_degree = std::max(g.max_degree, g.degree(v));
            g.min_degree = std::min(g.min_degree, g.degree(v));
        }
        if (n == 0) g.min_degree = 0;
        return g;
    }
};

// Edge-list text format: first data line "n m", then m lines "u v".
// Lines starting with '#' are comments; blank lines are skipped.
inline graph load_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string data;
    if (!next_data_line(data)) throw parse_error(lineno + 1, "missing header \"n m\"");
    {
        std::istringstream hs(data);
        std::string extra;
        if (!(hs >> n >> m) || (hs >> extra))
            throw parse_error(lineno, "header must be \"n m\"");
        if (n < 0 || m < 0) throw parse_error(lineno, "negative count in header");
    }
    for (long long e = 0; e < m; ++e) {
        if (!next_data_line(data))
            throw parse_error(lineno + 1, "expected " + std::to_string(m) + " edges, found " +
                                              std::to_string(e));
        std::istringstream es(data);
        long long u, v;
        std::string extra;
        if (!(es >> u >> v) || (es >> extra)) throw parse_error(lineno, "edge line must be \"u v\"");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error(lineno, "vertex index out of range");
        if (u == v) throw parse_error(lineno, "self-loop");
        int lo = static_cast<int>(std::min(u, v)), hi = static_cast<int>(std::max(u, v));
        if (!seen.insert(std::pair<int, int>(lo, hi)).second)
            throw parse_error(lineno, "duplicate edge");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_data_line(data)) throw parse_error(lineno, "trailing data after last edge");
    return graph::from_edges(static_cast<int>(n), std::move(edges));
}

// Removed-vertex set over a graph's vertices: models the induced subgraph
// G[S] with S = V minus removed. Removals follow the recursion's LIFO
// discipline; a vertex is never removed twice.
class vertex_mask {
public:
    explicit vertex_mask(int n) : removed_(n, 0) {}
    explicit vertex_mask(const graph& g) : removed_(g.n, 0) {}

    int size() const { return static_cast<int>(removed_.size()); }
    bool removed(int v) const { return removed_[v] != 0; }
    int removed_count() const { return removed_count_; }
    int live_count() const { return size() - removed_count_; }

    void remove(int v) {
        if (removed_[v]) throw std::invalid_argument("vertex_mask: vertex already removed");
        removed_[v] = 1;
        ++removed_count_;
    }
    void restore(int v) {
        if (!removed_[v]) throw std::invalid_argument("vertex_mask: vertex not removed");
        removed_[v] = 0;
        --removed_count_;
    }

private:
    std::vector<std::uint8_t> removed_;
    int removed_count_ = 0;
};

// Neighbors of v surviving the mask, ascending. v itself must be alive.
inline std::vector<int> neighbors_in(const graph& g, const vertex_mask& mask, int v) {
    if (mask.removed(v)) throw std::invalid_argument("neighbors_in: vertex is removed");
    std::vector<int> out;
    out.reserve(g.adj[v].size());
    for (int u : g.adj[v])
        if (!mask.removed(u)) out.push_back(u);
    return out;
}

// Degree in the full, unmasked graph.
inline int degree(const graph& g, int v) { return g.degree(v); }

// Total order on edges; rank[e] is the position of edge e. The default is
// the identity (index order of the sorted edge list).
struct edge_order {
    std::vector<int> rank;

    static edge_order identity(int m) {
        edge_order o;
        o.rank.resize(m);
        std::iota(o.rank.begin(), o.rank.end(), 0);
        return o;
    }
    // ids listed from smallest to largest position
    static edge_order from_order_list(const std::vector<int>& ids) {
        edge_order o;
        o.rank.assign(ids.size(), -1);
        for (std::size_t p = 0; p < ids.size(); ++p) {
            int e = ids[p];
            if (e < 0 || e >= static_cast<int>(ids.size()) || o.rank[e] != -1)
                throw std::invalid_argument("edge_order: not a permutation of 0..m-1");
            o.rank[e] = static_cast<int>(p);
        }
        return o;
    }

    bool less(int e, int f) const { return rank[e] < rank[f]; }
};

// Edge-order file: whitespace-separated edge ids, smallest position first.
inline edge_order load_edge_order(std::string_view text, int m_edges) {
    std::istringstream in{std::string(text)};
    std::vector<int> ids;
    long long e;
    while (in >> e) ids.push_back(static_cast<int>(e));
    if (static_cast<int>(ids.size()) != m_edges)
        throw std::invalid_argument("edge_order: expected " + std::to_string(m_edges) +
                                    " entries, found " + std::to_string(ids.size()));
    return edge_order::from_order_list(ids);
}

} // namespace polylog
