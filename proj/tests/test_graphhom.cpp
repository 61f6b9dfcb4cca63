#include <doctest.h>

#include "polylog/graphhom.hpp"
#include "polylog/oracle.hpp"
#include "testutil.hpp"

using namespace polylog;
using testutil::rng_t;

namespace {

sym_matrix<rational> random_small_matrix(int q, rng_t& rng) {
    std::vector<rational> e(q * q, rational(0));
    for (int i = 0; i < q; ++i)
        for (int j = i; j < q; ++j) {
            rational v(static_cast<long long>(rng() % 3));
            e[i * q + j] = v;
            e[j * q + i] = v;
        }
    return sym_matrix<rational>(q, std::move(e));
}

subtree make_subtree(const graph& g, std::vector<int> edge_ids) {
    return testutil::subtree_from_edges(g, edge_ids);
}

using testutil::forest_sum;

} // namespace

TEST_SUITE("graphhom") {

TEST_CASE("matrix validation and loading") {
    CHECK_THROWS_AS(sym_matrix<rational>(1, {rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(sym_matrix<rational>(2, {rational(0), rational(1), rational(2), rational(0)}),
                    std::invalid_argument);
    auto a = load_sym_matrix("# K2 adjacency\n2\n0 1\n1 0\n");
    CHECK(a.q == 2);
    CHECK(a.at(0, 1) == rational(1));
    auto b = load_sym_matrix("2\n1/2 -1/3\n-1/3 2\n");
    CHECK(b.at(1, 0) == rational(-1, 3));
    CHECK_THROWS_AS(load_sym_matrix("2\n0 1\n"), parse_error);
    CHECK_THROWS_AS(load_sym_matrix("2\n0 1\n1\n"), parse_error);
    CHECK_THROWS_AS(load_sym_matrix("2\n0 1\n2 0\n"), parse_error);
}

TEST_CASE("tree weight examples") {
    graph k2 = testutil::complete_graph(2);
    edge_order o = edge_order::identity(1);
    auto a2 = sym_matrix<rational>::adjacency_of_complete(2);
    subtree t = make_subtree(k2, {0});
    auto w = tree_weight(k2, o, a2, t, 2);
    CHECK(w[0] == rational(0));
    CHECK(w[1] == rational(-1, 2));
    CHECK(w[2] == rational(0));

    auto j2 = sym_matrix<rational>::all_ones(2);
    CHECK(tree_weight(k2, o, j2, t, 2).is_zero());

    // |T| beyond the truncation order vanishes
    graph p3 = testutil::path_graph(3);
    subtree t2 = make_subtree(p3, {0, 1});
    CHECK(tree_weight(p3, edge_order::identity(2), a2, t2, 1).is_zero());
}

TEST_CASE("ratio examples") {
    auto a2 = sym_matrix<rational>::adjacency_of_complete(2);
    graph k1 = testutil::complete_graph(1);
    vertex_mask m1(k1);
    CHECK(ratio_hom<rational>(k1, edge_order::identity(0), a2, m1, 0, 2) ==
          trunc_series<rational>::one(2));

    graph k2 = testutil::complete_graph(2);
    vertex_mask m2(k2);
    trunc_series<rational> expect(2); // 1/(1 - x/2)
    expect[0] = rational(1);
    expect[1] = rational(1, 2);
    expect[2] = rational(1, 4);
    CHECK(ratio_hom<rational>(k2, edge_order::identity(1), a2, m2, 0, 2) == expect);

    auto j2 = sym_matrix<rational>::all_ones(2);
    graph k4 = testutil::complete_graph(4);
    vertex_mask m4(k4);
    CHECK(ratio_hom<rational>(k4, edge_order::identity(6), j2, m4, 0, 3) ==
          trunc_series<rational>::one(3));
}

TEST_CASE("log H examples") {
    auto a2 = sym_matrix<rational>::adjacency_of_complete(2);
    graph k2 = testutil::complete_graph(2);
    auto s = log_h<rational>(k2, a2, 2);
    CHECK(s[1] == rational(-1, 2));
    CHECK(s[2] == rational(-1, 8));

    auto j3 = sym_matrix<rational>::all_ones(3);
    graph k4 = testutil::complete_graph(4);
    CHECK(log_h<rational>(k4, j3, 3).is_zero());

    graph c4 = testutil::cycle_graph(4);
    CHECK(log_h<rational>(c4, a2, 3) ==
          oracle::formal_log(oracle::exact_hom_poly(c4, a2), 3));
}

TEST_CASE("matches the formal log of the exact homomorphism polynomial") {
    rng_t rng(4321);
    for (int it = 0; it < 8; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        graph g = testutil::random_graph(n, 0.5, rng);
        for (int q : {2, 3}) {
            auto a = random_small_matrix(q, rng);
            CHECK(log_h<rational>(g, a, 4) ==
                  oracle::formal_log(oracle::exact_hom_poly(g, a), 4));
        }
    }
}

TEST_CASE("forest sum of tree weights reproduces H") {
    rng_t rng(1111);
    int done = 0;
    while (done < 6) {
        int n = 2 + static_cast<int>(rng() % 4); // up to 5 vertices
        graph g = testutil::random_graph(n, 0.6, rng);
        if (g.edge_count() > 8) continue;
        ++done;
        for (int q : {2, 3}) {
            auto a = random_small_matrix(q, rng);
            auto h = oracle::exact_hom_poly(g, a);
            for (int rep = 0; rep < 5; ++rep) {
                edge_order o = testutil::random_order(g.edge_count(), rng);
                CHECK(forest_sum(g, o, a) == h);
            }
        }
    }
}

TEST_CASE("min-edge grouping partitions the anchored trees") {
    rng_t rng(2222);
    graph g = testutil::random_connected(6, 0.5, rng);
    const int m = 3;
    edge_order order = testutil::random_order(g.edge_count(), rng);
    // count all distinct trees with <= m edges by brute force
    long long direct = 0;
    for (std::uint32_t bits = 1; bits < (1u << g.edge_count()); ++bits) {
        if (std::popcount(bits) > m) continue;
        std::vector<int> vs;
        for (int e = 0; e < g.edge_count(); ++e)
            if (bits & (1u << e)) {
                vs.push_back(g.edges[e].first);
                vs.push_back(g.edges[e].second);
            }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        if (static_cast<int>(vs.size()) != std::popcount(bits) + 1) continue;
        std::vector<int> uf(g.n);
        for (int v : vs) uf[v] = v;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool tree = true;
        for (int e = 0; e < g.edge_count() && tree; ++e) {
            if (!(bits & (1u << e))) continue;
            int ru = find(g.edges[e].first), rv = find(g.edges[e].second);
            if (ru == rv)
                tree = false;
            else
                uf[ru] = rv;
        }
        if (tree) ++direct;
    }
    long long grouped = 0;
    vertex_mask mask(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        enumerate_subtrees(g, mask, anchor::at_edge(e), m, [&](const subtree& t) {
            for (int e2 : t.edge_ids)
                if (order.rank[e2] < order.rank[e]) return visit_control::skip_children;
            ++grouped;
            return visit_control::descend;
        });
    }
    CHECK(grouped == direct);
}

TEST_CASE("additive over disjoint unions") {
    rng_t rng(8181);
    auto a2 = sym_matrix<rational>::adjacency_of_complete(2);
    graph a = testutil::random_graph(3, 0.7, rng);
    graph b = testutil::random_graph(4, 0.5, rng);
    auto sum = log_h<rational>(a, a2, 3);
    sum.add(log_h<rational>(b, a2, 3));
    CHECK(log_h<rational>(testutil::disjoint_union(a, b), a2, 3) == sum);
}

TEST_CASE("H at 1 recovers proper coloring counts (polynomial level)") {
    rng_t rng(3333);
    auto a3 = sym_matrix<rational>::adjacency_of_complete(3);
    for (int it = 0; it < 6; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        graph g = testutil::random_graph(n, 0.5, rng);
        rational h1 = oracle::poly_eval(oracle::exact_hom_poly(g, a3), rational(1));
        CHECK(h1 * rational(3).pow_int(static_cast<unsigned>(n)) ==
              oracle::poly_eval(oracle::exact_chromatic(g), rational(3)));
    }
}

TEST_CASE("Penrose partition") {
    graph k3 = testutil::complete_graph(3);
    CHECK(penrose_partition_check(k3, edge_order::identity(3)));
    graph k4 = testutil::complete_graph(4);
    CHECK(penrose_partition_check(k4, edge_order::identity(6)));
    // forests: every connected set is its own singleton interval
    graph tree = testutil::path_graph(6);
    CHECK(penrose_partition_check(tree, edge_order::identity(5)));
    // restriction to a vertex subset
    CHECK(penrose_partition_check(k4, edge_order::identity(6), {0}));
    rng_t rng(4444);
    for (int it = 0; it < 4; ++it) {
        graph g = testutil::random_graph(5, 0.6, rng);
        edge_order o = testutil::random_order(g.edge_count(), rng);
        CHECK(penrose_partition_check(g, o));
    }
}

} // TEST_SUITE
