#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polylog/graph.hpp"
#include "polylog/graphhom.hpp"
#include "polylog/rational.hpp"
#include "polylog/series.hpp"

// Brute-force reference implementations backing the test suites. Everything
// here is deliberately naive and shares no arithmetic with the fast paths
// beyond the scalar type: polynomials are plain coefficient vectors with
// local schoolbook helpers.
namespace polylog::oracle {

using exact_poly = std::vector<rational>; // coefficient i of x^i

inline void poly_trim(exact_poly& p) {
    while (p.size() > 1 && p.back().is_zero()) p.pop_back();
}

inline exact_poly poly_mul(const exact_poly& a, const exact_poly& b) {
    exact_poly r(a.size() + b.size() - 1, rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

inline exact_poly poly_sub(const exact_poly& a, const exact_poly& b) {
    exact_poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

inline rational poly_eval(const exact_poly& p, const rational& t) {
    rational acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

inline std::complex<double> poly_eval_complex(const exact_poly& p, std::complex<double> t) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i].to_double();
    return acc;
}

inline std::vector<std::uint32_t> adjacency_bitmasks(const graph& g) {
    std::vector<std::uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

// Independence polynomial by 2^n subset enumeration: coefficient k counts
// independent sets of size k.
inline exact_poly exact_independence_poly(const graph& g) {
    if (g.n > 24) throw std::invalid_argument("exact_independence_poly: graph too large (n > 24)");
    auto adj = adjacency_bitmasks(g);
    exact_poly p(static_cast<std::size_t>(g.n) + 1, rational(0));
    const std::uint32_t all = g.n == 32 ? ~0u : (1u << g.n) - 1;
    for (std::uint32_t s = 0;; ++s) {
        bool indep = true;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & s) {
                indep = false;
                break;
            }
        }
        if (indep) p[static_cast<std::size_t>(std::popcount(s))] += rational(1);
        if (s == all) break;
    }
    poly_trim(p);
    return p;
}

// Z_sfo(G;t) = sum over independent sets S of prod_{v in S} (-t^{deg_G(v)}).
// Rejects graphs with isolated vertices, where the weight degenerates.
inline exact_poly exact_sfo_poly(const graph& g) {
    if (g.n > 24) throw std::invalid_argument("exact_sfo_poly: graph too large (n > 24)");
    if (g.n > 0 && g.min_degree == 0)
        throw std::invalid_argument("exact_sfo_poly: isolated vertex (degree-0 weight degenerates)");
    auto adj = adjacency_bitmasks(g);
    exact_poly p(static_cast<std::size_t>(2 * g.edge_count()) + 1, rational(0));
    const std::uint32_t all = g.n == 0 ? 0 : (1u << g.n) - 1;
    for (std::uint32_t s = 0;; ++s) {
        bool indep = true;
        int degsum = 0, size = 0;
        std::uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[v] & s) {
                indep = false;
                break;
            }
            degsum += g.degree(v);
            ++size;
        }
        if (indep) p[degsum] += (size % 2 == 0) ? rational(1) : rational(-1);
        if (s == all) break;
    }
    poly_trim(p);
    return p;
}

// Number of sink-free orientations by enumerating all 2^m orientations.
inline long long count_sfo(const graph& g) {
    const int m = g.edge_count();
    if (m > 22) throw std::invalid_argument("count_sfo: too many edges (m > 22)");
    // bit e == 0 orients edge e from low to high endpoint
    std::vector<std::uint32_t> out_if_zero(g.n, 0), out_if_one(g.n, 0);
    for (int e = 0; e < m; ++e) {
        out_if_zero[g.edges[e].first] |= 1u << e;
        out_if_one[g.edges[e].second] |= 1u << e;
    }
    long long count = 0;
    const std::uint32_t top = m == 0 ? 0 : (1u << m) - 1;
    for (std::uint32_t bits = 0;; ++bits) {
        bool sink_free = true;
        for (int v = 0; v < g.n && sink_free; ++v)
            sink_free = ((~bits & out_if_zero[v]) | (bits & out_if_one[v])) != 0;
        if (sink_free) ++count;
        if (bits == top) break;
    }
    return count;
}

namespace detail {

inline exact_poly chi_rec(int n, std::vector<std::pair<int, int>> edges) {
    if (edges.empty()) {
        exact_poly p(static_cast<std::size_t>(n) + 1, rational(0));
        p[n] = rational(1);
        return p;
    }
    auto [u, v] = edges.back();
    std::vector<std::pair<int, int>> del = edges;
    del.pop_back();

    // contract v into u, relabel the last index down
    std::vector<std::pair<int, int>> con;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        int a = edges[i].first, b = edges[i].second;
        if (a == v) a = u;
        if (b == v) b = u;
        if (a == b) continue;
        if (a > v) --a;
        if (b > v) --b;
        if (a > b) std::swap(a, b);
        con.emplace_back(a, b);
    }
    std::sort(con.begin(), con.end());
    con.erase(std::unique(con.begin(), con.end()), con.end());
    return poly_sub(chi_rec(n, std::move(del)), chi_rec(n - 1, std::move(con)));
}

} // namespace detail

// Chromatic polynomial chi(G;q) by deletion-contraction; coefficient i of q^i.
inline exact_poly exact_chromatic(const graph& g) {
    if (g.edge_count() > 24) throw std::invalid_argument("exact_chromatic: too many edges");
    return detail::chi_rec(g.n, g.edges);
}

// P(G;z) = (-z)^n chi(G;-1/z); coefficient i equals (-1)^i [q^{n-i}] chi.
inline exact_poly p_from_chromatic(const exact_poly& chi, int n) {
    exact_poly p(static_cast<std::size_t>(n) + 1, rational(0));
    for (int i = 0; i <= n; ++i) {
        rational a = n - i < static_cast<int>(chi.size()) ? chi[n - i] : rational(0);
        p[i] = (i % 2 == 0) ? a : -a;
    }
    poly_trim(p);
    return p;
}

// H(G;x) = q^{-|V|} hom(G, J + x(A-J)) by enumerating all q^n colorings.
inline exact_poly exact_hom_poly(const graph& g, const sym_matrix<rational>& a) {
    double maps = std::pow(static_cast<double>(a.q), static_cast<double>(g.n));
    if (maps > 1e6) throw std::invalid_argument("exact_hom_poly: q^n too large");
    exact_poly total(1, rational(0));
    std::vector<int> color(g.n, 0);
    for (;;) {
        exact_poly term(1, rational(1));
        for (auto [u, v] : g.edges) {
            exact_poly lin{rational(1), a.at(color[u], color[v]) - rational(1)};
            term = poly_mul(term, lin);
        }
        if (total.size() < term.size()) total.resize(term.size(), rational(0));
        for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
        int i = 0;
        while (i < g.n && ++color[i] == a.q) color[i++] = 0;
        if (i == g.n) break;
    }
    rational qpow(1);
    for (int i = 0; i < g.n; ++i) qpow *= rational(a.q);
    for (auto& c : total) c /= qpow;
    poly_trim(total);
    return total;
}

// m-th Taylor polynomial of log p for p(0)=1, by the standard recurrence
// s_k = p_k - (1/k) sum_{j<k} j s_j p_{k-j} (independent of the fast path).
inline trunc_series<rational> formal_log(const exact_poly& p, int m) {
    if (p.empty() || !(p[0] == rational(1)))
        throw std::invalid_argument("formal_log: constant term must be 1");
    auto coeff = [&](int k) { return k < static_cast<int>(p.size()) ? p[k] : rational(0); };
    trunc_series<rational> s(m);
    for (int k = 1; k <= m; ++k) {
        rational acc(0);
        for (int j = 1; j < k; ++j) acc += rational(j) * s[j] * coeff(k - j);
        s[k] = coeff(k) - acc / rational(k);
    }
    return s;
}

// Generating function of broken-circuit-free forests by edge count, by
// enumerating all edge subsets.
inline exact_poly bcf_forest_poly(const graph& g, const edge_order& order) {
    const int m = g.edge_count();
    if (m > 22) throw std::invalid_argument("bcf_forest_poly: too many edges");
    exact_poly p(static_cast<std::size_t>(m) + 1, rational(0));
    for (std::uint32_t bits = 0; bits < (1u << m); ++bits) {
        // forest test via union-find
        std::vector<int> uf(g.n);
        for (int v = 0; v < g.n; ++v) uf[v] = v;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool forest = true;
        int count = 0;
        for (int e = 0; e < m && forest; ++e) {
            if (!(bits & (1u << e))) continue;
            ++count;
            int ru = find(g.edges[e].first), rv = find(g.edges[e].second);
            if (ru == rv)
                forest = false;
            else
                uf[ru] = rv;
        }
        if (!forest) continue;
        // broken-circuit test: a chord whose rank beats its whole tree path
        bool bcf = true;
        for (int e = 0; e < m && bcf; ++e) {
            if (bits & (1u << e)) continue;
            auto [a, b] = g.edges[e];
            if (find(a) != find(b)) continue;
            // BFS in the forest from a to b tracking the path max rank
            std::vector<int> prev_edge(g.n, -1), prev(g.n, -1);
            std::vector<int> queue{a};
            std::vector<std::uint8_t> seen(g.n, 0);
            seen[a] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                int x = queue[qi];
                for (int e2 = 0; e2 < m; ++e2) {
                    if (!(bits & (1u << e2))) continue;
                    auto [p2, q2] = g.edges[e2];
                    int other = p2 == x ? q2 : (q2 == x ? p2 : -1);
                    if (other < 0 || seen[other]) continue;
                    seen[other] = 1;
                    prev[other] = x;
                    prev_edge[other] = e2;
                    queue.push_back(other);
                }
            }
            int best = -1;
            for (int x = b; x != a; x = prev[x]) best = std::max(best, order.rank[prev_edge[x]]);
            if (order.rank[e] > best) bcf = false;
        }
        if (bcf) p[count] += rational(1);
    }
    poly_trim(p);
    return p;
}

} // namespace polylog::oracle
