#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polylog/graph.hpp"
#include "polylog/parallel.hpp"
#include "polylog/series.hpp"
#include "polylog/trees.hpp"

namespace polylog {

// Symmetric q x q spin-interaction matrix.
template <class S>
struct sym_matrix {
    int q = 0;
    std::vector<S> entries; // row-major

    sym_matrix() = default;
    sym_matrix(int q_, std::vector<S> e) : q(q_), entries(std::move(e)) {
        if (q < 2) throw std::invalid_argument("sym_matrix: q must be at least 2");
        if (static_cast<int>(entries.size()) != q * q)
            throw std::invalid_argument("sym_matrix: wrong entry count");
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                if (!(at(i, j) == at(j, i)))
                    throw std::invalid_argument("sym_matrix: matrix is not symmetric");
    }

    const S& at(int i, int j) const { return entries[i * q + j]; }

    static sym_matrix adjacency_of_complete(int q_) {
        std::vector<S> e(q_ * q_, S(1));
        for (int i = 0; i < q_; ++i) e[i * q_ + i] = S(0);
        return sym_matrix(q_, std::move(e));
    }
    static sym_matrix all_ones(int q_) { return sym_matrix(q_, std::vector<S>(q_ * q_, S(1))); }
};

// Matrix file: first data line "q", then q lines of q entries (rationals,
// "p" or "p/q"). '#' comments and blank lines are skipped.
inline sym_matrix<rational> load_sym_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
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
    if (!next_data_line(data)) throw parse_error(lineno + 1, "missing dimension line \"q\"");
    int q = 0;
    {
        std::istringstream hs(data);
        std::string extra;
        if (!(hs >> q) || (hs >> extra)) throw parse_error(lineno, "dimension line must be \"q\"");
        if (q < 2) throw parse_error(lineno, "q must be at least 2");
    }
    std::vector<rational> entries;
    entries.reserve(q * q);
    for (int r = 0; r < q; ++r) {
        if (!next_data_line(data)) throw parse_error(lineno + 1, "expected " + std::to_string(q) + " matrix rows");
        std::istringstream rs(data);
        std::string tok;
        int got = 0;
        while (rs >> tok) {
            try {
                entries.push_back(rational::from_string(tok));
            } catch (const std::exception& ex) {
                throw parse_error(lineno, std::string("bad matrix entry: ") + ex.what());
            }
            ++got;
        }
        if (got != q) throw parse_error(lineno, "row must contain exactly " + std::to_string(q) + " entries");
    }
    try {
        return sym_matrix<rational>(q, std::move(entries));
    } catch (const std::exception& ex) {
        throw parse_error(lineno, ex.what());
    }
}

// Truncation of the tree weight
//   w_T(x) = q^{-(|T|+1)} sum_phi x^{|T|} prod_{ij in T}(A-J)_{phi i, phi j}
//            * prod_{ij broken}(J + x(A-J))_{phi i, phi j},
// with broken edges of T taken inside G[V(T)]. Result has order m and
// vanishes when |T| > m.
template <class S>
trunc_series<S> tree_weight(const graph& g, const edge_order& order, const sym_matrix<S>& a,
                            const subtree& t, int m) {
    trunc_series<S> out(m);
    const int te = t.edge_count();
    if (te > m) return out;
    const int kk = m - te;
    const int nv = static_cast<int>(t.vertices.size());

    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < nv; ++i) pos[t.vertices[i]] = i;
    std::vector<int> broken = broken_edges(g, order, t);

    trunc_series<S> sum(kk);
    std::vector<int> color(nv, 0);
    for (;;) {
        S fac(1);
        bool zero = false;
        for (int e : t.edge_ids) {
            auto [x, y] = g.edges[e];
            fac *= a.at(color[pos[x]], color[pos[y]]) - S(1);
            if (fac == S(0)) {
                zero = true;
                break;
            }
        }
        if (!zero) {
            trunc_series<S> poly = trunc_series<S>::monomial(kk, 0, fac);
            for (int e : broken) {
                auto [x, y] = g.edges[e];
                trunc_series<S> lin(kk);
                lin[0] = S(1);
                if (kk >= 1) lin[1] = a.at(color[pos[x]], color[pos[y]]) - S(1);
                poly = mul_trunc(poly, lin, kk);
            }
            sum.add(poly);
        }
        // odometer over [q]^{V(T)}
        int i = 0;
        while (i < nv && ++color[i] == a.q) color[i++] = 0;
        if (i == nv) break;
    }

    S qpow(1);
    for (int i = 0; i <= te; ++i) qpow *= S(a.q);
    sum.scale(S(1) / qpow);
    out.add_shifted(sum, te);
    return out;
}

// Truncated ratio R_{S,v}^[m] = (H(G[S-v];x) / H(G[S];x))^[m]: reciprocal of
// 1 + sum over ALL trees containing v (no broken-circuit filter) of w_T times
// the telescoped ratio product.
template <class S>
trunc_series<S> ratio_hom(const graph& g, const edge_order& order, const sym_matrix<S>& a,
                          vertex_mask& mask, int v, int m) {
    if (mask.removed(v)) throw std::invalid_argument("ratio_hom: vertex is removed");
    trunc_series<S> f(m);
    if (m >= 1) {
        enumerate_subtrees(g, mask, anchor::at_vertex(v), m, [&](const subtree& t) {
            const int kk = m - t.edge_count();
            trunc_series<S> w = tree_weight(g, order, a, t, m);
            if (w.is_zero()) return visit_control::descend;
            trunc_series<S> prod = trunc_series<S>::one(kk);
            if (kk > 0) {
                mask.remove(v);
                for (std::size_t i = 1; i < t.vertices.size(); ++i) {
                    trunc_series<S> ri = ratio_hom<S>(g, order, a, mask, t.vertices[i], kk);
                    prod = mul_trunc(prod, ri, kk);
                    mask.remove(t.vertices[i]);
                }
                for (std::size_t i = t.vertices.size(); i-- > 1;) mask.restore(t.vertices[i]);
                mask.restore(v);
            }
            f.add(mul_trunc(w, prod, m));
            return visit_control::descend;
        });
    }
    return recip_one_plus(f, m);
}

// m-th Taylor polynomial of log H(G;x), H(G;x) = q^{-|V|} hom(G, J+x(A-J)).
// Trees are grouped by their minimum edge under `order`; each group is an
// edge-anchored enumeration with subtrees containing a smaller edge pruned.
template <class S>
trunc_series<S> log_h(const graph& g, const edge_order& order, const sym_matrix<S>& a, int m,
                      unsigned threads = 1) {
    trunc_series<S> acc(m);
    const int me = g.edge_count();
    if (me == 0 || m == 0) return acc;
    std::vector<trunc_series<S>> terms(me, trunc_series<S>(m));
    parallel_for(static_cast<std::size_t>(me), threads, [&](std::size_t idx) {
        const int e = static_cast<int>(idx);
        trunc_series<S> total(m);
        vertex_mask mask(g);
        enumerate_subtrees(g, mask, anchor::at_edge(e), m, [&](const subtree& t) {
            for (int e2 : t.edge_ids)
                if (order.rank[e2] < order.rank[e]) return visit_control::skip_children;
            const int te = t.edge_count();
            const int kk = m - te;
            trunc_series<S> dw = euler_derivative(tree_weight(g, order, a, t, m));
            if (dw.is_zero()) return visit_control::descend;
            trunc_series<S> prod = trunc_series<S>::one(kk);
            if (kk > 0) {
                for (std::size_t i = 0; i < t.vertices.size(); ++i) {
                    trunc_series<S> ri = ratio_hom<S>(g, order, a, mask, t.vertices[i], kk);
                    prod = mul_trunc(prod, ri, kk);
                    mask.remove(t.vertices[i]);
                }
                for (std::size_t i = t.vertices.size(); i-- > 0;) mask.restore(t.vertices[i]);
            }
            total.add(mul_trunc(dw, prod, m));
            return visit_control::descend;
        });
        terms[idx] = std::move(total);
    });
    for (const auto& t : terms) acc.add(t);
    return integrate_logderiv(acc);
}

template <class S>
trunc_series<S> log_h(const graph& g, const sym_matrix<S>& a, int m, unsigned threads = 1) {
    return log_h<S>(g, edge_order::identity(g.edge_count()), a, m, threads);
}

// Exhaustive Penrose-interval check (test utility, small graphs only): maps
// every connected edge subset to its minimum spanning tree under `order` and
// verifies the fibers are exactly the intervals [T, T u B(T)]. When
// `restrict_to` is nonempty, only connected subsets meeting it are checked.
inline bool penrose_partition_check(const graph& g, const edge_order& order,
                                    const std::vector<int>& restrict_to = {}) {
    const int me = g.edge_count();
    if (me > 22) throw std::invalid_argument("penrose_partition_check: graph too large");
    std::vector<std::uint8_t> restrict_mask(g.n, 0);
    for (int v : restrict_to) restrict_mask[v] = 1;
    const bool restricted = !restrict_to.empty();

    std::map<std::vector<int>, long long> fiber_count;
    for (std::uint32_t bits = 1; bits < (1u << me); ++bits) {
        std::vector<int> es;
        for (int e = 0; e < me; ++e)
            if (bits & (1u << e)) es.push_back(e);
        // connectivity of the spanned subgraph
        std::vector<int> vs;
        for (int e : es) {
            vs.push_back(g.edges[e].first);
            vs.push_back(g.edges[e].second);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (restricted) {
            bool meets = false;
            for (int v : vs) meets = meets || restrict_mask[v];
            if (!meets) continue;
        }
        std::vector<int> comp(g.n, -1);
        std::vector<int> stack{vs[0]};
        comp[vs[0]] = 0;
        int reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int e : es) {
                auto [p2, q2] = g.edges[e];
                int other = p2 == x ? q2 : (q2 == x ? p2 : -1);
                if (other >= 0 && comp[other] < 0) {
                    comp[other] = 0;
                    ++reached;
                    stack.push_back(other);
                }
            }
        }
        if (reached != static_cast<int>(vs.size())) continue;

        // minimum spanning tree under the order (Kruskal)
        std::vector<int> by_rank = es;
        std::sort(by_rank.begin(), by_rank.end(),
                  [&](int x, int y) { return order.rank[x] < order.rank[y]; });
        std::vector<int> uf(g.n);
        for (int v : vs) uf[v] = v;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        std::vector<int> tree_edges;
        for (int e : by_rank) {
            int ru = find(g.edges[e].first), rv = find(g.edges[e].second);
            if (ru != rv) {
                uf[ru] = rv;
                tree_edges.push_back(e);
            }
        }
        std::sort(tree_edges.begin(), tree_edges.end());

        subtree t;
        t.edge_ids = tree_edges;
        t.vertices = vs;
        std::vector<int> b = broken_edges(g, order, t);
        // every chosen chord must be a broken edge of the fiber's tree
        for (int e : es) {
            if (std::binary_search(tree_edges.begin(), tree_edges.end(), e)) continue;
            if (!std::binary_search(b.begin(), b.end(), e)) return false;
        }
        ++fiber_count[tree_edges];
    }
    for (const auto& [tree_edges, cnt] : fiber_count) {
        subtree t;
        t.edge_ids = tree_edges;
        std::vector<int> vs;
        for (int e : tree_edges) {
            vs.push_back(g.edges[e].first);
            vs.push_back(g.edges[e].second);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        t.vertices = vs;
        std::vector<int> b = broken_edges(g, order, t);
        if (cnt != (1LL << b.size())) return false;
    }
    return true;
}

} // namespace polylog
