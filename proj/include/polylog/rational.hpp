#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polylog {

// Arbitrary-precision signed integer.
//
// Values in int64 range live in a single machine word; larger magnitudes
// spill into base-2^32 limbs (little endian, top limb nonzero). Every
// operation canonicalizes back to the word form when the result fits, so
// representations are unique and equality is a plain field compare.
class bigint {
public:
    bigint() = default;
    bigint(long long v) : small_(v) {}
    bigint(int v) : small_(v) {}
    bigint(unsigned long long v) {
        if (v <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()))
            small_ = static_cast<long long>(v);
        else
            *this = from_mag(mag_from_u64(v), +1);
    }

    bool is_small() const { return mag_.empty(); }
    bool is_zero() const { return mag_.empty() && small_ == 0; }
    int sign() const {
        if (!mag_.empty()) return small_ < 0 ? -1 : +1;
        return small_ < 0 ? -1 : (small_ > 0 ? +1 : 0);
    }

    bool fits_int64() const { return mag_.empty(); }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("bigint: value exceeds int64");
        return small_;
    }

    friend bigint operator-(const bigint& a) {
        if (a.mag_.empty()) {
            if (a.small_ == std::numeric_limits<long long>::min()) {
                bigint r;
                r.mag_ = mag_from_u64(static_cast<std::uint64_t>(1) << 63);
                r.small_ = +1;
                return r;
            }
            return bigint(-a.small_);
        }
        return from_mag(a.mag_, -a.sign());
    }

    friend bigint operator+(const bigint& a, const bigint& b) {
        if (a.is_small() && b.is_small()) {
            __int128 s = static_cast<__int128>(a.small_) + b.small_;
            return from_i128(s);
        }
        return add_general(a, b, /*negate_b=*/false);
    }
    friend bigint operator-(const bigint& a, const bigint& b) {
        if (a.is_small() && b.is_small()) {
            __int128 s = static_cast<__int128>(a.small_) - b.small_;
            return from_i128(s);
        }
        return add_general(a, b, /*negate_b=*/true);
    }
    friend bigint operator*(const bigint& a, const bigint& b) {
        if (a.is_small() && b.is_small()) {
            __int128 p = static_cast<__int128>(a.small_) * b.small_;
            return from_i128(p);
        }
        if (a.is_zero() || b.is_zero()) return bigint{};
        std::vector<std::uint32_t> m = mul_mag(a.mag(), b.mag());
        return from_mag(std::move(m), a.sign() * b.sign());
    }

    // Truncated division (C++ semantics: quotient rounds toward zero).
    friend bigint operator/(const bigint& a, const bigint& b) {
        bigint q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend bigint operator%(const bigint& a, const bigint& b) {
        bigint q, r;
        divmod(a, b, q, r);
        return r;
    }

    static void divmod(const bigint& a, const bigint& b, bigint& q, bigint& r) {
        if (b.is_zero()) throw std::domain_error("bigint: division by zero");
        if (a.is_small() && b.is_small()) {
            if (a.small_ == std::numeric_limits<long long>::min() && b.small_ == -1) {
                q = -a;
                r = bigint{};
                return;
            }
            q = bigint(a.small_ / b.small_);
            r = bigint(a.small_ % b.small_);
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag(), b.mag(), qm, rm);
        int qs = a.sign() * b.sign();
        q = from_mag(std::move(qm), qs);
        r = from_mag(std::move(rm), a.sign());
    }

    bigint& operator+=(const bigint& o) { return *this = *this + o; }
    bigint& operator-=(const bigint& o) { return *this = *this - o; }
    bigint& operator*=(const bigint& o) { return *this = *this * o; }

    friend bool operator==(const bigint& a, const bigint& b) {
        return a.small_ == b.small_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const bigint& a, const bigint& b) { return !(a == b); }
    friend bool operator<(const bigint& a, const bigint& b) { return cmp(a, b) < 0; }
    friend bool operator>(const bigint& a, const bigint& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const bigint& a, const bigint& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const bigint& a, const bigint& b) { return cmp(a, b) >= 0; }

    static int cmp(const bigint& a, const bigint& b) {
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : +1;
        if (sa == 0) return 0;
        if (a.is_small() && b.is_small())
            return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? +1 : 0);
        int c = cmp_mag(a.mag(), b.mag());
        return sa > 0 ? c : -c;
    }

    friend bigint abs(const bigint& a) { return a.sign() < 0 ? -a : a; }

    static bigint gcd(const bigint& a, const bigint& b) {
        if (a.is_small() && b.is_small()) {
            std::uint64_t x = u64_abs(a.small_), y = u64_abs(b.small_);
            return bigint(static_cast<unsigned long long>(std::gcd(x, y)));
        }
        bigint x = abs(a), y = abs(b);
        while (!y.is_zero()) {
            bigint q, r;
            divmod(x, y, q, r);
            x = std::move(y);
            y = abs(r);
        }
        return x;
    }

    std::string to_string() const {
        if (is_small()) return std::to_string(small_);
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!(m.size() == 1 && m[0] == 0)) {
            std::uint32_t rem = shortdiv_inplace(m, 1000000000u);
            std::string chunk = std::to_string(rem);
            bool last = (m.size() == 1 && m[0] == 0);
            if (!last) chunk = std::string(9 - chunk.size(), '0') + chunk;
            digits = chunk + digits;
        }
        if (digits.empty()) digits = "0";
        return (sign() < 0 ? "-" : "") + digits;
    }

    static bigint from_string(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("bigint: empty string");
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = (s[0] == '-');
            i = 1;
        }
        if (i == s.size()) throw std::invalid_argument("bigint: no digits");
        bigint v;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("bigint: invalid digit in \"" + std::string(s) + "\"");
            v = v * bigint(10) + bigint(s[i] - '0');
        }
        return neg ? -v : v;
    }

    long double to_long_double() const {
        if (is_small()) return static_cast<long double>(small_);
        long double v = 0.0L;
        // Top three limbs carry more precision than the 64-bit mantissa.
        std::size_t top = mag_.size();
        std::size_t lo = top >= 3 ? top - 3 : 0;
        for (std::size_t i = top; i-- > lo;) v = v * 4294967296.0L + mag_[i];
        v = std::ldexp(v, static_cast<int>(32 * lo));
        return sign() < 0 ? -v : v;
    }
    double to_double() const { return static_cast<double>(to_long_double()); }

    std::size_t limb_count() const { return mag_.empty() ? 1 : mag_.size(); }

private:
    long long small_ = 0;                // value when mag_ empty, else sign (+1/-1)
    std::vector<std::uint32_t> mag_;     // little-endian magnitude when non-empty

    static std::uint64_t u64_abs(long long v) {
        return v < 0 ? 0ULL - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
    }

    std::vector<std::uint32_t> mag() const {
        if (!mag_.empty()) return mag_;
        return mag_from_u64(u64_abs(small_));
    }

    static std::vector<std::uint32_t> mag_from_u64(std::uint64_t v) {
        std::vector<std::uint32_t> m;
        m.push_back(static_cast<std::uint32_t>(v));
        if (v >> 32) m.push_back(static_cast<std::uint32_t>(v >> 32));
        if (m.size() == 1 && m[0] == 0) return {0};
        return m;
    }

    static bigint from_i128(__int128 v) {
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
            return bigint(static_cast<long long>(v));
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
        std::vector<std::uint32_t> m;
        while (u) {
            m.push_back(static_cast<std::uint32_t>(u));
            u >>= 32;
        }
        return from_mag(std::move(m), neg ? -1 : +1);
    }

    static bigint from_mag(std::vector<std::uint32_t> m, int sign) {
        while (m.size() > 1 && m.back() == 0) m.pop_back();
        bigint r;
        if (m.empty() || (m.size() == 1 && m[0] == 0) || sign == 0) return r;
        if (m.size() <= 2) {
            std::uint64_t v = m[0];
            if (m.size() == 2) v |= static_cast<std::uint64_t>(m[1]) << 32;
            if (sign > 0 && v <= static_cast<std::uint64_t>(std::numeric_limits<long long>::max())) {
                r.small_ = static_cast<long long>(v);
                return r;
            }
            if (sign < 0 && v <= static_cast<std::uint64_t>(1) << 63) {
                r.small_ = (v == static_cast<std::uint64_t>(1) << 63)
                               ? std::numeric_limits<long long>::min()
                               : -static_cast<long long>(v);
                return r;
            }
        }
        r.mag_ = std::move(m);
        r.small_ = sign;
        return r;
    }

    static bigint add_general(const bigint& a, const bigint& b, bool negate_b) {
        int sa = a.sign(), sb = negate_b ? -b.sign() : b.sign();
        if (sa == 0) return negate_b ? -b : b;
        if (sb == 0) return a;
        std::vector<std::uint32_t> ma = a.mag(), mb = b.mag();
        if (sa == sb) return from_mag(add_mag(ma, mb), sa);
        int c = cmp_mag(ma, mb);
        if (c == 0) return bigint{};
        if (c > 0) return from_mag(sub_mag(ma, mb), sa);
        return from_mag(sub_mag(mb, ma), sb);
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : +1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : +1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto &lo = a.size() >= b.size() ? b : a, &hi = a.size() >= b.size() ? a : b;
        std::vector<std::uint32_t> r;
        r.reserve(hi.size() + 1);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
            r.push_back(static_cast<std::uint32_t>(s));
            carry = s >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r;
        r.reserve(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t d = static_cast<std::int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
            borrow = d < 0;
            if (d < 0) d += static_cast<std::int64_t>(1) << 32;
            r.push_back(static_cast<std::uint32_t>(d));
        }
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t t = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(t);
                carry = t >> 32;
            }
            r[i + b.size()] += static_cast<std::uint32_t>(carry);
        }
        return r;
    }

    static std::uint32_t shortdiv_inplace(std::vector<std::uint32_t>& m, std::uint32_t d) {
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (m.size() > 1 && m.back() == 0) m.pop_back();
        return static_cast<std::uint32_t>(rem);
    }

    // Knuth algorithm D on magnitudes: u = q*v + r with 0 <= r < v.
    static void divmod_mag(std::vector<std::uint32_t> u, std::vector<std::uint32_t> v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        while (u.size() > 1 && u.back() == 0) u.pop_back();
        while (v.size() > 1 && v.back() == 0) v.pop_back();
        if (cmp_mag(u, v) < 0) {
            q = {0};
            r = std::move(u);
            return;
        }
        if (v.size() == 1) {
            q = u;
            std::uint32_t rem = shortdiv_inplace(q, v[0]);
            r = {rem};
            return;
        }
        const std::size_t n = v.size(), m = u.size() - n;
        const int s = std::countl_zero(v.back());
        std::vector<std::uint32_t> vn(n), un(u.size() + 1, 0);
        for (std::size_t i = n; i-- > 1;)
            vn[i] = (v[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(v[i - 1]) >> (32 - s)) : 0);
        vn[0] = v[0] << s;
        un[u.size()] = s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u.back()) >> (32 - s)) : 0;
        for (std::size_t i = u.size(); i-- > 1;)
            un[i] = (u[i] << s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u[i - 1]) >> (32 - s)) : 0);
        un[0] = u[0] << s;

        q.assign(m + 1, 0);
        const std::uint64_t base = static_cast<std::uint64_t>(1) << 32;
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t top = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
            std::uint64_t qhat = top / vn[n - 1];
            std::uint64_t rhat = top % vn[n - 1];
            while (qhat >= base ||
                   qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
                --qhat;
                rhat += vn[n - 1];
                if (rhat >= base) break;
            }
            // multiply and subtract
            std::int64_t k = 0, t = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * vn[i];
                t = static_cast<std::int64_t>(un[i + j]) - k -
                    static_cast<std::int64_t>(p & 0xffffffffu);
                un[i + j] = static_cast<std::uint32_t>(t);
                k = static_cast<std::int64_t>(p >> 32) - (t >> 32);
            }
            t = static_cast<std::int64_t>(un[j + n]) - k;
            un[j + n] = static_cast<std::uint32_t>(t);

            q[j] = static_cast<std::uint32_t>(qhat);
            if (t < 0) {
                // qhat was one too large: add divisor back
                q[j] -= 1;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s2 = static_cast<std::uint64_t>(un[i + j]) + vn[i] + c2;
                    un[i + j] = static_cast<std::uint32_t>(s2);
                    c2 = s2 >> 32;
                }
                un[j + n] += static_cast<std::uint32_t>(c2);
            }
        }
        r.assign(n, 0);
        for (std::size_t i = 0; i < n - 1; ++i)
            r[i] = (un[i] >> s) | (s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s)) : 0);
        r[n - 1] = un[n - 1] >> s;
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        while (r.size() > 1 && r.back() == 0) r.pop_back();
    }
};

// Exact rational scalar: reduced fraction with positive denominator.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(long long v) : num_(v), den_(1) {}
    rational(int v) : num_(v), den_(1) {}
    rational(long long num, long long den) : num_(num), den_(den) { reduce(); }
    rational(bigint num, bigint den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const bigint& num() const { return num_; }
    const bigint& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == bigint(1); }
    int sign() const { return num_.sign(); }

    friend rational operator-(const rational& a) { return rational(-a.num_, a.den_, already_reduced{}); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        // cross-reduce to keep intermediates small
        bigint g1 = bigint::gcd(a.num_, b.den_);
        bigint g2 = bigint::gcd(b.num_, a.den_);
        return rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1),
                        already_reduced{});
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero()) throw std::domain_error("rational: division by zero");
        rational inv(b.den_, b.num_, unchecked{});
        inv.fix_sign_reduce_cross();
        return a * inv;
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    friend rational abs(const rational& a) { return a.sign() < 0 ? -a : a; }

    rational pow_int(unsigned e) const {
        rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // "p" when integral, "p/q" otherwise
    std::string to_string() const {
        if (is_integer()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

    static rational from_string(std::string_view s) {
        std::size_t slash = s.find('/');
        if (slash == std::string_view::npos) return rational(bigint::from_string(s), bigint(1));
        bigint n = bigint::from_string(s.substr(0, slash));
        bigint d = bigint::from_string(s.substr(slash + 1));
        if (d.is_zero()) throw std::invalid_argument("rational: zero denominator in \"" + std::string(s) + "\"");
        return rational(std::move(n), std::move(d));
    }

    long double to_long_double() const { return num_.to_long_double() / den_.to_long_double(); }
    double to_double() const { return static_cast<double>(to_long_double()); }

private:
    struct already_reduced {};
    struct unchecked {};
    rational(bigint n, bigint d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}
    rational(bigint n, bigint d, unchecked) : num_(std::move(n)), den_(std::move(d)) {}

    void fix_sign_reduce_cross() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        if (num_.is_zero()) {
            den_ = bigint(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        bigint g = bigint::gcd(num_, den_);
        if (!(g == bigint(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    bigint num_, den_;
};

} // namespace polylog
