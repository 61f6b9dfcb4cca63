#pragma once

#include <stdexcept>
#include <vector>

#include "polylog/graph.hpp"
#include "polylog/parallel.hpp"
#include "polylog/series.hpp"
#include "polylog/trees.hpp"

namespace polylog {

// Truncated ratio R_{S,v}^[m] = (P(G[S-v];z) / P(G[S];z))^[m] where P is the
// broken-circuit-free forest generating function of the masked graph. Built
// from 1/R = 1 + sum over BCF trees T containing v of z^|T| times the
// telescoped product of ratios on the shrinking vertex set.
//
// Non-BCF trees are pruned together with their whole enumeration subtree: a
// broken chord of T stays a broken chord of every descendant, since its
// endpoints stay inside the vertex set and the tree path between them never
// changes.
template <class S>
trunc_series<S> ratio_chrom(const graph& g, const edge_order& order, vertex_mask& mask, int v,
                            int m) {
    if (mask.removed(v)) throw std::invalid_argument("ratio_chrom: vertex is removed");
    trunc_series<S> f(m);
    if (m >= 1) {
        enumerate_subtrees(g, mask, anchor::at_vertex(v), m, [&](const subtree& t) {
            if (!is_bcf(g, order, t)) return visit_control::skip_children;
            const int te = t.edge_count();
            const int kk = m - te;
            if (kk == 0) {
                f[te] += S(1);
                return visit_control::descend;
            }
            trunc_series<S> prod = trunc_series<S>::one(kk);
            mask.remove(v);
            for (std::size_t i = 1; i < t.vertices.size(); ++i) {
                trunc_series<S> ri = ratio_chrom<S>(g, order, mask, t.vertices[i], kk);
                prod = mul_trunc(prod, ri, kk);
                mask.remove(t.vertices[i]);
            }
            for (std::size_t i = t.vertices.size(); i-- > 1;) mask.restore(t.vertices[i]);
            mask.restore(v);
            f.add_shifted(prod, te);
            return visit_control::descend;
        });
    }
    return recip_one_plus(f, m);
}

// (P^{e in}(G;z) / P(G;z))^[m]: sum over BCF trees containing e with at most
// m edges of z^|T| times the telescoped ratio product over all of V(T).
template <class S>
trunc_series<S> p_edge_in_ratio(const graph& g, const edge_order& order, int e, int m) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("p_edge_in_ratio: bad edge");
    trunc_series<S> out(m);
    if (m < 1) return out;
    vertex_mask mask(g);
    enumerate_subtrees(g, mask, anchor::at_edge(e), m, [&](const subtree& t) {
        if (!is_bcf(g, order, t)) return visit_control::skip_children;
        const int te = t.edge_count();
        const int kk = m - te;
        trunc_series<S> prod = trunc_series<S>::one(kk);
        if (kk > 0) {
            for (std::size_t i = 0; i < t.vertices.size(); ++i) {
                trunc_series<S> ri = ratio_chrom<S>(g, order, mask, t.vertices[i], kk);
                prod = mul_trunc(prod, ri, kk);
                mask.remove(t.vertices[i]);
            }
            for (std::size_t i = t.vertices.size(); i-- > 0;) mask.restore(t.vertices[i]);
        }
        out.add_shifted(prod, te);
        return visit_control::descend;
    });
    return out;
}

// m-th Taylor polynomial of log P(G;z); the result does not depend on the
// edge order even though the per-edge terms do.
template <class S>
trunc_series<S> log_p(const graph& g, const edge_order& order, int m, unsigned threads = 1) {
    trunc_series<S> acc(m);
    const int me = g.edge_count();
    if (me == 0 || m == 0) return acc;
    std::vector<trunc_series<S>> terms(me, trunc_series<S>(m));
    parallel_for(static_cast<std::size_t>(me), threads, [&](std::size_t i) {
        terms[i] = p_edge_in_ratio<S>(g, order, static_cast<int>(i), m);
    });
    for (const auto& t : terms) acc.add(t);
    return integrate_logderiv(acc);
}

template <class S>
trunc_series<S> log_p(const graph& g, int m, unsigned threads = 1) {
    return log_p<S>(g, edge_order::identity(g.edge_count()), m, threads);
}

} // namespace polylog
