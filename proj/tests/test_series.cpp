#include <doctest.h>

#include <random>
#include <type_traits>

#include "polylog/oracle.hpp"
#include "polylog/series.hpp"

using polylog::mul_trunc;
using polylog::rational;
using polylog::recip_one_plus;
using polylog::trunc_series;

namespace {

using rseries = trunc_series<rational>;

rseries from_ints(std::initializer_list<long long> cs) {
    rseries s(static_cast<int>(cs.size()) - 1);
    int k = 0;
    for (long long c : cs) s[k++] = rational(c);
    return s;
}

rseries random_series(int order, std::mt19937_64& rng, bool zero_const) {
    std::uniform_int_distribution<long long> num(-9, 9);
    std::uniform_int_distribution<long long> den(1, 9);
    rseries s(order);
    for (int k = zero_const ? 1 : 0; k <= order; ++k) s[k] = rational(num(rng), den(rng));
    return s;
}

// The cubic-time iterated-Horner truncation of 1/(1-h), h(0)=0, applied to
// h = -f; kept as an independent formulation to compare against.
rseries horner_recip_one_plus(const rseries& f, int m) {
    rseries h(m);
    for (int k = 1; k <= std::min(m, f.order()); ++k) h[k] = -f[k];
    rseries p = rseries::one(m);
    for (int i = 0; i < m; ++i) {
        p = mul_trunc(h, p, m);
        p[0] += rational(1);
    }
    return p;
}

} // namespace

static_assert(!std::is_same_v<trunc_series<rational>, trunc_series<double>>,
              "scalar kinds are distinct types; mixing them cannot compile");

TEST_SUITE("series") {

TEST_CASE("mul_trunc basics") {
    CHECK(mul_trunc(from_ints({1, 1}), from_ints({1, 1}), 2) == from_ints({1, 2, 1}));
    CHECK(mul_trunc(from_ints({1, 1, 1}), from_ints({1, -1}), 1) == from_ints({1, 0}));
    CHECK(mul_trunc(from_ints({0, 1}), from_ints({0, 1}), 3) == from_ints({0, 0, 1, 0}));
}

TEST_CASE("recip_one_plus basics") {
    CHECK(recip_one_plus(rseries::zero(0), 3) == from_ints({1, 0, 0, 0}));
    CHECK(recip_one_plus(from_ints({0, 1}), 3) == from_ints({1, -1, 1, -1}));
    CHECK(recip_one_plus(from_ints({0, 2, 1}), 2) == from_ints({1, -2, 3}));
    CHECK_THROWS_AS(recip_one_plus(from_ints({1, 1}), 2), std::invalid_argument);
}

TEST_CASE("integrate_logderiv basics") {
    CHECK(polylog::integrate_logderiv(rseries::zero(3)) == rseries::zero(3));
    CHECK(polylog::integrate_logderiv(from_ints({0, 2, -4})) == from_ints({0, 2, -2}));
    CHECK(polylog::integrate_logderiv(from_ints({0, 1})) == from_ints({0, 1}));
    CHECK_THROWS_AS(polylog::integrate_logderiv(from_ints({2, 1})), std::invalid_argument);
}

TEST_CASE("eval_at basics") {
    CHECK(polylog::eval_at(from_ints({1, 1, 1}), rational(0)) == rational(1));
    CHECK(polylog::eval_at(from_ints({1, 1}), rational(1, 2)) == rational(3, 2));
    rseries s(3);
    s[1] = rational(1);
    s[2] = rational(-1, 2);
    s[3] = rational(1, 3);
    CHECK(polylog::eval_at(s, rational(1)) == rational(5, 6));
}

TEST_CASE("recip is a true truncated inverse") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        int m = static_cast<int>(rng() % 13);
        rseries f = random_series(m, rng, true);
        rseries g = recip_one_plus(f, m);
        rseries one_plus_f = f;
        one_plus_f[0] += rational(1);
        CHECK(mul_trunc(g, one_plus_f, m) == rseries::one(m));
    }
}

TEST_CASE("mul_trunc commutes and associates") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 60; ++it) {
        int m = static_cast<int>(rng() % 9);
        rseries a = random_series(m, rng, false);
        rseries b = random_series(m, rng, false);
        rseries c = random_series(m, rng, false);
        CHECK(mul_trunc(a, b, m) == mul_trunc(b, a, m));
        CHECK(mul_trunc(mul_trunc(a, b, m), c, m) == mul_trunc(a, mul_trunc(b, c, m), m));
    }
}

TEST_CASE("recip agrees with the iterated-Horner formulation") {
    std::mt19937_64 rng(31337);
    for (int it = 0; it < 100; ++it) {
        int m = static_cast<int>(rng() % 11);
        rseries f = random_series(m, rng, true);
        CHECK(recip_one_plus(f, m) == horner_recip_one_plus(f, m));
    }
}

TEST_CASE("integrate_logderiv inverts the Euler derivative of a formal log") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<long long> num(-5, 5);
    for (int it = 0; it < 60; ++it) {
        int deg = 1 + static_cast<int>(rng() % 5);
        polylog::oracle::exact_poly p(deg + 1, rational(0));
        p[0] = rational(1);
        for (int k = 1; k <= deg; ++k) p[k] = rational(num(rng));
        int m = 1 + static_cast<int>(rng() % 8);
        auto lg = polylog::oracle::formal_log(p, m);
        CHECK(polylog::integrate_logderiv(polylog::euler_derivative(lg)) == lg);
    }
}

TEST_CASE("series padding reads missing coefficients as zero") {
    rseries small = from_ints({0, 1});
    rseries big = from_ints({0, 1, 0, 0, 0});
    CHECK(mul_trunc(small, small, 4) == mul_trunc(big, big, 4));
    CHECK(recip_one_plus(small, 4) == recip_one_plus(big, 4));
}

TEST_CASE("text and coefficient-string rendering") {
    rseries s(3);
    s[1] = rational(1);
    s[2] = rational(-1, 2);
    s[3] = rational(1, 3);
    CHECK(polylog::to_text(s) == "0 + 1*x + -1/2*x^2 + 1/3*x^3");
    auto cs = polylog::coeff_strings(s);
    REQUIRE(cs.size() == 4);
    CHECK(cs[2] == "-1/2");
    CHECK(polylog::series_from_coeff_strings<rational>(cs) == s);

    trunc_series<double> d(1);
    d[1] = 0.5;
    auto ds = polylog::coeff_strings(d);
    CHECK(polylog::series_from_coeff_strings<double>(ds) == d);
}

} // TEST_SUITE
