#pragma once

#include <stdexcept>
#include <vector>

#include "polylog/graph.hpp"
#include "polylog/parallel.hpp"
#include "polylog/series.hpp"

namespace polylog {

// Truncated marginal ratio R_{S,v}^[k] of the independence polynomial:
// Z^{v in}(G[S];x) / Z^{v out}(G[S];x) where S is the live vertex set of the
// mask. Neighbors are consumed in ascending order and restored on return;
// the result does not depend on that order.
template <class S>
trunc_series<S> ratio_hc(const graph& g, vertex_mask& mask, int v, int k) {
    if (mask.removed(v)) throw std::invalid_argument("ratio_hc: vertex is removed");
    if (k == 0) return trunc_series<S>::zero(0);
    std::vector<int> nbrs = neighbors_in(g, mask, v);
    if (nbrs.empty()) return trunc_series<S>::monomial(k, 1, S(1));

    mask.remove(v);
    trunc_series<S> f = trunc_series<S>::one(k - 1);
    for (int u : nbrs) {
        trunc_series<S> r = ratio_hc<S>(g, mask, u, k - 1);
        r[0] += S(1);
        f = mul_trunc(f, r, k - 1);
        mask.remove(u);
    }
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) mask.restore(*it);
    mask.restore(v);

    f[0] -= S(1);
    trunc_series<S> inv = recip_one_plus(f, k - 1);
    trunc_series<S> out(k);
    out.add_shifted(inv, 1);
    return out;
}

// m-th Taylor polynomial of log Z(G;x): per-vertex terms R/(1+R) summed over
// v, then coefficient k divided by k. Per-vertex ratios are independent and
// may run on several threads; the reduction is a fixed-order sum.
template <class S>
trunc_series<S> log_z_hc(const graph& g, int m, unsigned threads = 1) {
    trunc_series<S> acc(m);
    if (g.n == 0 || m == 0) return acc;
    std::vector<trunc_series<S>> terms(g.n, trunc_series<S>(m));
    parallel_for(static_cast<std::size_t>(g.n), threads, [&](std::size_t i) {
        int v = static_cast<int>(i);
        vertex_mask mask(g);
        trunc_series<S> r = ratio_hc<S>(g, mask, v, m);
        terms[i] = mul_trunc(r, recip_one_plus(r, m), m);
    });
    for (const auto& t : terms) acc.add(t);
    return integrate_logderiv(acc);
}

} // namespace polylog
