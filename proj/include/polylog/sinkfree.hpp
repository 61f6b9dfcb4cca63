#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylog/graph.hpp"
#include "polylog/parallel.hpp"
#include "polylog/series.hpp"

namespace polylog {

// Zero-free radius r_delta = (delta-1)^((delta-1)/delta) / delta for the
// sink-free-orientation polynomial on graphs of minimum degree delta >= 3.
// r_3 > 1/2, and r_delta increases to 1.
inline double r_delta(int delta) {
    if (delta < 3)
        throw std::invalid_argument(
            "r_delta: minimum degree below 3 (zeros reach 1/2 on degree-2 graphs)");
    double d = static_cast<double>(delta);
    return std::exp((d - 1.0) / d * std::log(d - 1.0)) / d;
}

// Truncated ratio R_{U,v}^[k] of the sink-free-orientation polynomial. The
// vertex weight is -t^{deg_G(v)} with the degree always taken in the full
// graph, even deep in the recursion; a vertex with deg_G(v) > k contributes
// the zero series.
template <class S>
trunc_series<S> ratio_sfo(const graph& g, vertex_mask& mask, int v, int k) {
    if (mask.removed(v)) throw std::invalid_argument("ratio_sfo: vertex is removed");
    const int d = g.degree(v);
    if (d > k) return trunc_series<S>::zero(k);
    if (d == 0) return trunc_series<S>::monomial(k, 0, S(-1)); // degenerate isolated vertex
    const int kk = k - d;
    std::vector<int> nbrs = neighbors_in(g, mask, v);

    mask.remove(v);
    trunc_series<S> f = trunc_series<S>::one(kk);
    for (int u : nbrs) {
        trunc_series<S> r = ratio_sfo<S>(g, mask, u, kk);
        r[0] += S(1);
        f = mul_trunc(f, r, kk);
        mask.remove(u);
    }
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) mask.restore(*it);
    mask.restore(v);

    f[0] -= S(1);
    trunc_series<S> inv = recip_one_plus(f, kk);
    trunc_series<S> out(k);
    out.add_shifted(inv, d, S(-1));
    return out;
}

// k-th Taylor polynomial of log Z_sfo,V(G;t): sum over v of
// deg_G(v) * R/(1+R), then coefficient j divided by j.
template <class S>
trunc_series<S> log_z_sfo(const graph& g, int k, unsigned threads = 1) {
    trunc_series<S> acc(k);
    if (g.n == 0 || k == 0) return acc;
    std::vector<trunc_series<S>> terms(g.n, trunc_series<S>(k));
    parallel_for(static_cast<std::size_t>(g.n), threads, [&](std::size_t i) {
        int v = static_cast<int>(i);
        vertex_mask mask(g);
        trunc_series<S> r = ratio_sfo<S>(g, mask, v, k);
        trunc_series<S> t = mul_trunc(r, recip_one_plus(r, k), k);
        t.scale(S(g.degree(v)));
        terms[i] = std::move(t);
    });
    for (const auto& t : terms) acc.add(t);
    return integrate_logderiv(acc);
}

// Smallest k with k >= log(m/eps) / log(2 r_delta), floored at 1.
inline int truncation_order(long long m_edges, double epsilon, int delta) {
    if (m_edges < 1) throw std::invalid_argument("truncation_order: need at least one edge");
    if (!(epsilon > 0.0)) throw std::invalid_argument("truncation_order: epsilon must be positive");
    double lo = std::log(static_cast<double>(m_edges) / epsilon);
    if (lo <= 0.0) return 1;
    double k = lo / std::log(2.0 * r_delta(delta));
    int ik = static_cast<int>(std::ceil(k));
    while (static_cast<double>(ik) < k) ++ik;
    return ik < 1 ? 1 : ik;
}

// Tail bound |f_k(1/2) - log Z_sfo,V(G;1/2)| <= 2m / ((k+1)(2r-1)(2r)^k).
inline double error_bound(long long m_edges, int k, int delta) {
    if (k < 1) throw std::invalid_argument("error_bound: k must be at least 1");
    double r2 = 2.0 * r_delta(delta);
    return 2.0 * static_cast<double>(m_edges) /
           (static_cast<double>(k + 1) * (r2 - 1.0) * std::pow(r2, k));
}

// Output of the approximate counter.
struct sfo_estimate {
    int k = 0;                  // truncation order used
    rational taylor_value;      // f_k(1/2), exact
    double bound = 0.0;         // certified tail bound at this k
    long double log_count = 0;  // m log 2 + f_k(1/2)
    double epsilon = 0.0;       // requested accuracy
};

// Deterministic approximation of the number of sink-free orientations within
// a multiplicative exp(epsilon): picks the truncation order, computes the
// exact Taylor polynomial of log Z_sfo, evaluates it at 1/2 as a rational,
// and reports the certified log-count. The order is raised past the generic
// formula when needed so that the reported bound is always <= epsilon.
inline sfo_estimate approx_sfo(const graph& g, double epsilon, unsigned threads = 1) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("approx_sfo: epsilon must be positive");
    if (g.min_degree < 3)
        throw std::invalid_argument(
            "approx_sfo: graph has a vertex of degree < 3; zeros of the sink-free polynomial "
            "reach 1/2 on degree-2 graphs, so the truncation bound fails");
    const long long m = g.edge_count();
    int k = truncation_order(m, epsilon, g.min_degree);
    while (error_bound(m, k, g.min_degree) > epsilon) ++k;

    trunc_series<rational> series = log_z_sfo<rational>(g, k, threads);
    rational half(1, 2);
    rational f_half = eval_at(series, half);

    sfo_estimate est;
    est.k = k;
    est.taylor_value = f_half;
    est.bound = error_bound(m, k, g.min_degree);
    est.log_count = static_cast<long double>(m) * std::log(2.0L) + f_half.to_long_double();
    est.epsilon = epsilon;
    return est;
}

// Decimal rendering of exp(log_count) without overflowing double range.
inline std::string count_decimal_string(long double log_count) {
    const long double log10_count = log_count / std::log(10.0L);
    char buf[64];
    if (log10_count < 4000.0L && log10_count > -4000.0L) {
        long double value = std::exp(log_count);
        if (value < 1e18L) {
            std::snprintf(buf, sizeof(buf), "%.15Lg", value);
            return buf;
        }
    }
    long double e = std::floor(log10_count);
    long double mant = std::exp((log10_count - e) * std::log(10.0L));
    long long ee = static_cast<long long>(e);
    std::snprintf(buf, sizeof(buf), "%.15Lg", mant);
    return std::string(buf) + "e" + (ee >= 0 ? "+" : "") + std::to_string(ee);
}

} // namespace polylog
