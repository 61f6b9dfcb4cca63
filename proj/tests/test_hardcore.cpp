#include <doctest.h>

#include "polylog/hardcore.hpp"
#include "polylog/oracle.hpp"
#include "testutil.hpp"

using namespace polylog;
using testutil::rng_t;

namespace {

trunc_series<rational> from_ints(std::initializer_list<long long> cs) {
    trunc_series<rational> s(static_cast<int>(cs.size()) - 1);
    int k = 0;
    for (long long c : cs) s[k++] = rational(c);
    return s;
}

} // namespace

TEST_SUITE("hardcore") {

TEST_CASE("ratio examples") {
    graph k1 = testutil::complete_graph(1);
    vertex_mask m1(k1);
    for (int k : {1, 2, 3})
        CHECK(ratio_hc<rational>(k1, m1, 0, k) == trunc_series<rational>::monomial(k, 1, rational(1)));
    CHECK(ratio_hc<rational>(k1, m1, 0, 0).is_zero());

    graph k2 = testutil::complete_graph(2);
    vertex_mask m2(k2);
    CHECK(ratio_hc<rational>(k2, m2, 0, 3) == from_ints({0, 1, -1, 1}));

    graph p3 = testutil::path_graph(3);
    vertex_mask m3(p3);
    CHECK(ratio_hc<rational>(p3, m3, 1, 3) == from_ints({0, 1, -2, 3}));

    m3.remove(1);
    CHECK_THROWS_AS(ratio_hc<rational>(p3, m3, 1, 3), std::invalid_argument);
}

TEST_CASE("a vertex with no live neighbors behaves like an isolated one") {
    graph p3 = testutil::path_graph(3);
    vertex_mask mask(p3);
    mask.remove(0);
    mask.remove(2);
    CHECK(ratio_hc<rational>(p3, mask, 1, 4) ==
          trunc_series<rational>::monomial(4, 1, rational(1)));
}

TEST_CASE("log Z examples") {
    graph empty = graph::from_edges(0, {});
    CHECK(log_z_hc<rational>(empty, 4).is_zero());
    trunc_series<rational> log1px(3); // log(1+x) truncated
    log1px[1] = rational(1);
    log1px[2] = rational(-1, 2);
    log1px[3] = rational(1, 3);
    CHECK(log_z_hc<rational>(testutil::complete_graph(1), 3) == log1px);
    CHECK(log_z_hc<rational>(testutil::complete_graph(2), 2) == from_ints({0, 2, -2}));
    CHECK(log_z_hc<rational>(testutil::complete_graph(2), 0).is_zero());
}

TEST_CASE("matches the formal log of the exact independence polynomial") {
    for (const graph& g : testutil::all_connected_upto_iso(5)) {
        CHECK(log_z_hc<rational>(g, 6) ==
              oracle::formal_log(oracle::exact_independence_poly(g), 6));
    }
    rng_t rng(8080);
    for (int it = 0; it < 15; ++it) {
        int n = 4 + static_cast<int>(rng() % 4);
        graph g = testutil::random_graph(n, 0.5, rng);
        CHECK(log_z_hc<rational>(g, 5) ==
              oracle::formal_log(oracle::exact_independence_poly(g), 5));
    }
}

TEST_CASE("processing order does not matter (random relabelings)") {
    rng_t rng(1234);
    graph g = testutil::random_connected(7, 0.5, rng);
    auto base = log_z_hc<rational>(g, 5);
    for (int it = 0; it < 20; ++it) {
        auto perm = testutil::random_perm(g.n, rng);
        graph h = testutil::relabel(g, perm);
        CHECK(log_z_hc<rational>(h, 5) == base);
        // per-vertex ratios map through the relabeling
        int v = static_cast<int>(rng() % g.n);
        vertex_mask mg(g), mh(h);
        CHECK(ratio_hc<rational>(g, mg, v, 4) == ratio_hc<rational>(h, mh, perm[v], 4));
    }
}

TEST_CASE("additive over disjoint unions") {
    rng_t rng(555);
    graph a = testutil::random_graph(4, 0.5, rng);
    graph b = testutil::random_graph(5, 0.5, rng);
    auto sum = log_z_hc<rational>(a, 5);
    sum.add(log_z_hc<rational>(b, 5));
    CHECK(log_z_hc<rational>(testutil::disjoint_union(a, b), 5) == sum);
}

TEST_CASE("all ratios coincide on vertex-transitive cycles") {
    for (int n : {3, 5, 8}) {
        graph c = testutil::cycle_graph(n);
        vertex_mask mask(c);
        auto r0 = ratio_hc<rational>(c, mask, 0, 6);
        for (int v = 1; v < n; ++v) CHECK(ratio_hc<rational>(c, mask, v, 6) == r0);
    }
}

TEST_CASE("threaded and serial runs agree") {
    rng_t rng(31);
    graph g = testutil::random_graph(8, 0.5, rng);
    auto serial = log_z_hc<rational>(g, 6, 1);
    CHECK(log_z_hc<rational>(g, 6, 2) == serial);
    CHECK(log_z_hc<rational>(g, 6, 8) == serial);
}

} // TEST_SUITE
