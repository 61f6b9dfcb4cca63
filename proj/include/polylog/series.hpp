#pragma once

#include <cassert>
#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylog/rational.hpp"

namespace polylog {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<rational> {
    static constexpr const char* name = "exact";
    static std::string to_string(const rational& v) { return v.to_string(); }
    static rational from_string(std::string_view s) { return rational::from_string(s); }
};

template <>
struct scalar_traits<double> {
    static constexpr const char* name = "float";
    static std::string to_string(double v) {
        char buf[64];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, p);
    }
    static double from_string(std::string_view s) {
        double v = 0.0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size())
            throw std::invalid_argument("float scalar: invalid literal \"" + std::string(s) + "\"");
        return v;
    }
};

// Truncated power series: coefficients 0..order of a formal series in one
// variable. The scalar kind is a compile-time parameter, so exact and float
// series are distinct types and can never be mixed silently.
template <class S>
class trunc_series {
public:
    trunc_series() : coeffs_(1, S(0)) {}
    explicit trunc_series(int order) : coeffs_(check_order(order) + 1, S(0)) {}
    trunc_series(int order, std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != check_order(order) + 1)
            throw std::invalid_argument("trunc_series: coefficient count must be order+1");
    }

    static trunc_series zero(int order) { return trunc_series(order); }
    static trunc_series one(int order) {
        trunc_series s(order);
        s.coeffs_[0] = S(1);
        return s;
    }
    // c * x^d truncated at `order` (vanishes entirely when d > order)
    static trunc_series monomial(int order, int d, const S& c) {
        trunc_series s(order);
        if (d >= 0 && d <= order) s.coeffs_[d] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const S& operator[](int k) const { return coeffs_[k]; }
    S& operator[](int k) { return coeffs_[k]; }
    const std::vector<S>& coeffs() const { return coeffs_; }

    // coefficient of x^k, with zero padding beyond the stored order
    const S& coeff_or_zero(int k) const {
        static const S zero_v = S(0);
        if (k < 0 || k > order()) return zero_v;
        return coeffs_[k];
    }

    bool is_zero() const {
        for (const S& c : coeffs_)
            if (!(c == S(0))) return false;
        return true;
    }

    friend bool operator==(const trunc_series& a, const trunc_series& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const trunc_series& a, const trunc_series& b) { return !(a == b); }

    // add `s`, reading only coefficients up to this series' order
    void add(const trunc_series& s) {
        int top = std::min(order(), s.order());
        for (int k = 0; k <= top; ++k) coeffs_[k] += s.coeffs_[k];
    }
    // add c * x^shift * s, dropping terms beyond this series' order
    void add_shifted(const trunc_series& s, int shift, const S& c = S(1)) {
        for (int k = 0; k + shift <= order() && k <= s.order(); ++k)
            coeffs_[k + shift] += c * s.coeffs_[k];
    }
    void scale(const S& c) {
        for (S& v : coeffs_) v *= c;
    }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("trunc_series: negative order");
        return order;
    }

    std::vector<S> coeffs_;
};

// (a*b)^[m]; reads inputs only up to index m, pads missing coefficients with 0.
template <class S>
trunc_series<S> mul_trunc(const trunc_series<S>& a, const trunc_series<S>& b, int m) {
    trunc_series<S> r(m);
    int atop = std::min(a.order(), m), btop = std::min(b.order(), m);
    for (int i = 0; i <= atop; ++i) {
        if (a[i] == S(0)) continue;
        int jtop = std::min(btop, m - i);
        for (int j = 0; j <= jtop; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// (1/(1+f))^[m] for f with f(0)=0, by the convolution recurrence
// g_0 = 1, g_k = -sum_{j=1..k} f_j g_{k-j}.
template <class S>
trunc_series<S> recip_one_plus(const trunc_series<S>& f, int m) {
    if (!(f.coeff_or_zero(0) == S(0)))
        throw std::invalid_argument("recip_one_plus: constant term must be zero");
    trunc_series<S> g(m);
    g[0] = S(1);
    int ftop = std::min(f.order(), m);
    for (int k = 1; k <= m; ++k) {
        S acc(0);
        for (int j = 1; j <= std::min(k, ftop); ++j) acc += f[j] * g[k - j];
        g[k] = -acc;
    }
    return g;
}

// Inverse of s = x d/dx log Q: divides coefficient k by k. Recovers log Q
// from its Euler-derivative series.
template <class S>
trunc_series<S> integrate_logderiv(const trunc_series<S>& s) {
    if (!(s.coeff_or_zero(0) == S(0)))
        throw std::invalid_argument("integrate_logderiv: constant term must be zero");
    trunc_series<S> r(s.order());
    for (int k = 1; k <= s.order(); ++k) r[k] = s[k] / S(k);
    return r;
}

// x d/dx applied coefficient-wise (degree preserving).
template <class S>
trunc_series<S> euler_derivative(const trunc_series<S>& s) {
    trunc_series<S> r(s.order());
    for (int k = 1; k <= s.order(); ++k) r[k] = s[k] * S(k);
    return r;
}

// Horner evaluation of the truncated polynomial at t.
template <class S>
S eval_at(const trunc_series<S>& s, const S& t) {
    S acc(0);
    for (int k = s.order(); k >= 0; --k) acc = acc * t + s[k];
    return acc;
}

template <class S>
std::vector<std::string> coeff_strings(const trunc_series<S>& s) {
    std::vector<std::string> out;
    out.reserve(s.order() + 1);
    for (int k = 0; k <= s.order(); ++k) out.push_back(scalar_traits<S>::to_string(s[k]));
    return out;
}

template <class S>
trunc_series<S> series_from_coeff_strings(const std::vector<std::string>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("series: empty coefficient list");
    trunc_series<S> s(static_cast<int>(coeffs.size()) - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        s[static_cast<int>(k)] = scalar_traits<S>::from_string(coeffs[k]);
    return s;
}

// "c0 + c1*x + c2*x^2 + ... + cm*x^m"
template <class S>
std::string to_text(const trunc_series<S>& s, const char* var = "x") {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (k > 0) out += " + ";
        out += scalar_traits<S>::to_string(s[k]);
        if (k == 1)
            out += std::string("*") + var;
        else if (k > 1)
            out += std::string("*") + var + "^" + std::to_string(k);
    }
    return out;
}

} // namespace polylog
