#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "polylog/graph.hpp"

namespace polylog {

// Identifier sequence (e_1,...,e_k) of a rooted subtree; every prefix is the
// identifier of an ancestor in the enumeration tree.
using subtree_id = std::vector<int>;

// A subtree of the host graph, held by the enumerator and handed to visitors.
// vertices[0] is the vertex anchor (or vertices[0..1] the edge anchor's
// endpoints); the rest follow in discovery order. Visitors must not retain
// references: the object is mutated in place as the enumeration moves.
struct subtree {
    subtree_id edge_ids;
    std::vector<int> vertices;
    int edge_count() const { return static_cast<int>(edge_ids.size()); }
};

struct anchor {
    enum class kind_t { vertex, edge };
    kind_t kind;
    int index;

    static anchor at_vertex(int v) { return {kind_t::vertex, v}; }
    static anchor at_edge(int e) { return {kind_t::edge, e}; }
    bool is_vertex() const { return kind == kind_t::vertex; }
};

enum class visit_control { descend, skip_children, abort };

namespace detail {

struct tree_state {
    std::vector<std::uint8_t> in_tree; // vertex membership in V(T)
    std::vector<int> deg_in;           // degree within T

    explicit tree_state(int n) : in_tree(n, 0), deg_in(n, 0) {}
    static tree_state from(const graph& g, const subtree& t) {
        tree_state s(g.n);
        for (int v : t.vertices) s.in_tree[v] = 1;
        for (int e : t.edge_ids) {
            ++s.deg_in[g.edges[e].first];
            ++s.deg_in[g.edges[e].second];
        }
        return s;
    }
};

struct child_edge {
    int e; // edge id
    int u; // endpoint already in V(T)
    int w; // endpoint joining V(T)
};

// Candidate extensions of T by a boundary edge, filtered by the parent rule:
// T' = T + e is a child of T iff recomputing the identifier of T' removes e
// first, i.e. e is the largest leaf edge of T' whose removal is allowed by
// the anchor.
inline std::vector<child_edge> child_edges(const graph& g, const vertex_mask& mask,
                                           const anchor& a, const subtree& t,
                                           const tree_state& st) {
    std::vector<child_edge> cands;
    for (int u : t.vertices) {
        const auto& nb = g.adj[u];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (mask.removed(w) || st.in_tree[w]) continue;
            cands.push_back({g.adj_edge[u][i], u, w});
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const child_edge& x, const child_edge& y) { return x.e < y.e; });

    if (t.edge_count() == 0) return cands; // every single-edge tree's parent is {v}

    const int anchor_v = a.is_vertex() ? a.index : -1;
    const int anchor_e = a.is_vertex() ? -1 : a.index;
    std::vector<child_edge> out;
    for (const child_edge& c : cands) {
        // scan leaf edges of T' = T + c.e; reject if a removable one beats c.e
        bool ok = true;
        for (int e2 : t.edge_ids) {
            if (e2 <= c.e) continue;
            if (e2 == anchor_e) continue;
            auto [x, y] = g.edges[e2];
            int dx = st.deg_in[x] + (x == c.u);
            int dy = st.deg_in[y] + (y == c.u);
            bool removable = (dx == 1 && x != anchor_v) || (dy == 1 && y != anchor_v);
            if (removable) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(c);
    }
    return out;
}

template <class F>
visit_control invoke_visitor(F&& f, const subtree& t) {
    using R = std::invoke_result_t<F&, const subtree&>;
    if constexpr (std::is_void_v<R>) {
        f(t);
        return visit_control::descend;
    } else if constexpr (std::is_same_v<R, bool>) {
        return f(t) ? visit_control::descend : visit_control::abort;
    } else {
        return f(t);
    }
}

} // namespace detail

// Edges of the masked graph with exactly one endpoint in V(T), ascending.
inline std::vector<int> boundary_edges(const graph& g, const vertex_mask& mask,
                                       const subtree& t) {
    auto st = detail::tree_state::from(g, t);
    std::vector<int> out;
    for (int u : t.vertices) {
        const auto& nb = g.adj[u];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int w = nb[i];
            if (mask.removed(w) || st.in_tree[w]) continue;
            out.push_back(g.adj_edge[u][i]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All trees T' = T + e whose parent under the identifier rule is exactly T,
// ascending by e.
inline std::vector<subtree> children(const graph& g, const vertex_mask& mask,
                                     const anchor& a, const subtree& t) {
    auto st = detail::tree_state::from(g, t);
    std::vector<subtree> out;
    for (const auto& c : detail::child_edges(g, mask, a, t, st)) {
        subtree child = t;
        child.edge_ids.push_back(c.e);
        child.vertices.push_back(c.w);
        out.push_back(std::move(child));
    }
    return out;
}

// The unique identifier of the tree formed by `edge_ids`, relative to the
// anchor: the last entry is the largest leaf edge whose removal keeps the
// anchor represented, recursively.
inline subtree_id id_of(const graph& g, const anchor& a, std::vector<int> edge_ids) {
    const int k = static_cast<int>(edge_ids.size());
    if (k == 0) {
        if (!a.is_vertex()) throw std::invalid_argument("id_of: empty tree needs a vertex anchor");
        return {};
    }
    for (int e : edge_ids)
        if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("id_of: bad edge id");
    {
        std::vector<int> sorted = edge_ids;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("id_of: repeated edge");
    }
    // tree check: |V(T)| = |T|+1 and connected
    std::vector<int> verts;
    for (int e : edge_ids) {
        verts.push_back(g.edges[e].first);
        verts.push_back(g.edges[e].second);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<int>(verts.size()) != k + 1) throw std::invalid_argument("id_of: not a tree");
    {
        std::vector<int> stack{verts[0]};
        std::vector<std::uint8_t> seen_v(g.n, 0);
        seen_v[verts[0]] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e : edge_ids) {
                auto [p, q] = g.edges[e];
                int other = p == x ? q : (q == x ? p : -1);
                if (other >= 0 && !seen_v[other]) {
                    seen_v[other] = 1;
                    ++reached;
                    stack.push_back(other);
                }
            }
        }
        if (reached != k + 1) throw std::invalid_argument("id_of: not a tree");
    }
    if (a.is_vertex()) {
        if (!std::binary_search(verts.begin(), verts.end(), a.index))
            throw std::invalid_argument("id_of: tree does not contain the anchor vertex");
    } else {
        if (std::find(edge_ids.begin(), edge_ids.end(), a.index) == edge_ids.end())
            throw std::invalid_argument("id_of: tree does not contain the anchor edge");
    }

    const int anchor_v = a.is_vertex() ? a.index : -1;
    const int anchor_e = a.is_vertex() ? -1 : a.index;
    subtree_id id(k);
    std::vector<int> cur = edge_ids;
    std::vector<int> deg(g.n, 0);
    for (int e : cur) {
        ++deg[g.edges[e].first];
        ++deg[g.edges[e].second];
    }
    for (int pos = k; pos-- > 1;) {
        int best = -1, best_leaf = -1;
        for (int e : cur) {
            if (e == anchor_e) continue;
            auto [x, y] = g.edges[e];
            int leaf = -1;
            if (deg[x] == 1 && x != anchor_v)
                leaf = x;
            else if (deg[y] == 1 && y != anchor_v)
                leaf = y;
            if (leaf >= 0 && e > best) {
                best = e;
                best_leaf = leaf;
            }
        }
        assert(best >= 0);
        id[pos] = best;
        --deg[g.edges[best].first];
        --deg[g.edges[best].second];
        (void)best_leaf;
        cur.erase(std::find(cur.begin(), cur.end(), best));
    }
    id[0] = cur[0];
    return id;
}

// Depth-first enumeration over the spanning tree of subtrees. Visits every
// subtree of the masked graph containing the anchor with 1..max_edges edges,
// exactly once; for a vertex anchor the zero-edge tree is not visited.
// Returns false if the visitor aborted.
template <class Visitor>
bool enumerate_subtrees(const graph& g, const vertex_mask& mask, const anchor& a,
                        int max_edges, Visitor&& visit) {
    if (max_edges < 0) throw std::invalid_argument("enumerate_subtrees: negative max_edges");
    subtree cur;
    detail::tree_state st(g.n);
    if (a.is_vertex()) {
        int v = a.index;
        if (v < 0 || v >= g.n) throw std::invalid_argument("enumerate_subtrees: bad anchor vertex");
        if (mask.removed(v)) throw std::invalid_argument("enumerate_subtrees: anchor vertex removed");
        cur.vertices = {v};
        st.in_tree[v] = 1;
        if (max_edges == 0) return true;
    } else {
        int f = a.index;
        if (f < 0 || f >= g.edge_count())
            throw std::invalid_argument("enumerate_subtrees: bad anchor edge");
        auto [x, y] = g.edges[f];
        if (mask.removed(x) || mask.removed(y))
            throw std::invalid_argument("enumerate_subtrees: anchor edge endpoint removed");
        if (max_edges == 0) return true;
        cur.vertices = {x, y};
        cur.edge_ids = {f};
        st.in_tree[x] = st.in_tree[y] = 1;
        st.deg_in[x] = st.deg_in[y] = 1;
        visit_control c = detail::invoke_visitor(visit, cur);
        if (c == visit_control::abort) return false;
        if (c == visit_control::skip_children || max_edges == 1) return true;
    }

    struct frame {
        std::vector<detail::child_edge> cands;
        std::size_t next = 0;
    };
    std::vector<frame> frames;
    frames.push_back({detail::child_edges(g, mask, a, cur, st), 0});

    auto descend = [&](const detail::child_edge& c) {
        cur.edge_ids.push_back(c.e);
        cur.vertices.push_back(c.w);
        st.in_tree[c.w] = 1;
        st.deg_in[c.w] = 1;
        ++st.deg_in[c.u];
    };
    auto ascend = [&]() {
        int e = cur.edge_ids.back();
        cur.edge_ids.pop_back();
        int w = cur.vertices.back();
        cur.vertices.pop_back();
        auto [x, y] = g.edges[e];
        st.in_tree[w] = 0;
        st.deg_in[w] = 0;
        --st.deg_in[x == w ? y : x];
    };

    while (!frames.empty()) {
        frame& f = frames.back();
        if (f.next >= f.cands.size()) {
            frames.pop_back();
            if (!frames.empty()) ascend();
            continue;
        }
        const detail::child_edge c = f.cands[f.next++];
        descend(c);
        visit_control ctl = detail::invoke_visitor(visit, cur);
        if (ctl == visit_control::abort) return false;
        if (ctl == visit_control::descend && cur.edge_count() < max_edges) {
            frames.push_back({detail::child_edges(g, mask, a, cur, st), 0});
        } else {
            ascend();
        }
    }
    return true;
}

inline long long count_subtrees(const graph& g, const vertex_mask& mask, const anchor& a,
                                int max_edges) {
    long long n = 0;
    enumerate_subtrees(g, mask, a, max_edges, [&](const subtree&) { ++n; });
    return n;
}

// Broken edges of T: chords of G[V(T)] that are the largest edge (under
// `order`) of the unique cycle they close in T.
inline std::vector<int> broken_edges(const graph& g, const edge_order& order, const subtree& t) {
    std::vector<int> out;
    if (t.edge_count() == 0) return out;
    const int n = g.n;
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<std::uint8_t> in_t_vertex(n, 0), in_t_edge(g.edge_count(), 0);
    for (int v : t.vertices) in_t_vertex[v] = 1;
    for (int e : t.edge_ids) in_t_edge[e] = 1;

    // root T at its first vertex and record parent edges
    {
        int root = t.vertices[0];
        std::vector<int> stack{root};
        std::vector<std::uint8_t> seen(n, 0);
        seen[root] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const auto& nb = g.adj[x];
            for (std::size_t i = 0; i < nb.size(); ++i) {
                int y = nb[i], e = g.adj_edge[x][i];
                if (!in_t_edge[e] || seen[y]) continue;
                seen[y] = 1;
                parent[y] = x;
                parent_edge[y] = e;
                depth[y] = depth[x] + 1;
                stack.push_back(y);
            }
        }
    }

    for (int a = 0; a < n; ++a) {
        if (!in_t_vertex[a]) continue;
        const auto& nb = g.adj[a];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int b = nb[i], e = g.adj_edge[a][i];
            if (b < a || !in_t_vertex[b] || in_t_edge[e]) continue;
            // walk to the lowest common ancestor tracking the max rank
            int x = a, y = b, best = -1;
            while (x != y) {
                if (depth[x] < depth[y]) std::swap(x, y);
                best = std::max(best, order.rank[parent_edge[x]]);
                x = parent[x];
            }
            if (order.rank[e] > best) out.push_back(e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True iff T has no broken edge (stops at the first one found).
inline bool is_bcf(const graph& g, const edge_order& order, const subtree& t) {
    if (t.edge_count() == 0) return true;
    const int n = g.n;
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<std::uint8_t> in_t_vertex(n, 0), in_t_edge(g.edge_count(), 0);
    for (int v : t.vertices) in_t_vertex[v] = 1;
    for (int e : t.edge_ids) in_t_edge[e] = 1;
    {
        int root = t.vertices[0];
        std::vector<int> stack{root};
        std::vector<std::uint8_t> seen(n, 0);
        seen[root] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            const auto& nb = g.adj[x];
            for (std::size_t i = 0; i < nb.size(); ++i) {
                int y = nb[i], e = g.adj_edge[x][i];
                if (!in_t_edge[e] || seen[y]) continue;
                seen[y] = 1;
                parent[y] = x;
                parent_edge[y] = e;
                depth[y] = depth[x] + 1;
                stack.push_back(y);
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        if (!in_t_vertex[a]) continue;
        const auto& nb = g.adj[a];
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int b = nb[i], e = g.adj_edge[a][i];
            if (b < a || !in_t_vertex[b] || in_t_edge[e]) continue;
            int x = a, y = b, best = -1;
            while (x != y) {
                if (depth[x] < depth[y]) std::swap(x, y);
                best = std::max(best, order.rank[parent_edge[x]]);
                x = parent[x];
            }
            if (order.rank[e] > best) return false;
        }
    }
    return true;
}

} // namespace polylog
