#pragma once

// Exact rationals over int64 with overflow detection.

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pogcat {

struct ArithmeticOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

namespace detail {

inline int64_t narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("int64 overflow");
    return static_cast<int64_t>(v);
}

inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in add");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in sub");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 overflow in mul");
    return r;
}

// Floor division for b > 0.
inline int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace detail

/// Reduced fraction num/den with den > 0.
class Rational {
public:
    constexpr Rational() = default;
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit from integers is intended
    Rational(int64_t n, int64_t d) { assign(n, d); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    int64_t floor() const { return detail::floor_div(num_, den_); }
    int64_t ceil() const { return -detail::floor_div(-num_, den_); }

    /// Representative of this value modulo `period` in [0, period).
    Rational mod(const Rational& period) const {
        if (period.sign() <= 0) throw std::invalid_argument("Rational::mod: period must be positive");
        Rational q = *this / period;
        return *this - period * Rational(q.floor());
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num_) * b.num_;
        __int128 d = static_cast<__int128>(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational division by zero");
        __int128 n = static_cast<__int128>(a.num_) * b.den_;
        __int128 d = static_cast<__int128>(a.den_) * b.num_;
        return from128(n, d);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = detail::checked_sub(0, num_);
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 l = static_cast<__int128>(a.num_) * b.den_;
        __int128 r = static_cast<__int128>(b.num_) * a.den_;
        return l <=> r;
    }

    /// "p/q" or "p" when integral.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "-p", "p/q".
    static Rational parse(std::string_view s) {
        auto trim = [](std::string_view v) {
            while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
            while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
            return v;
        };
        s = trim(s);
        auto slash = s.find('/');
        auto parse_int = [&](std::string_view v) -> int64_t {
            v = trim(v);
            if (v.empty()) throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
            size_t i = 0;
            bool neg = false;
            if (v[0] == '-' || v[0] == '+') {
                neg = v[0] == '-';
                i = 1;
            }
            if (i == v.size()) throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
            int64_t out = 0;
            for (; i < v.size(); ++i) {
                if (v[i] < '0' || v[i] > '9')
                    throw std::invalid_argument("malformed rational '" + std::string(s) + "'");
                out = detail::checked_add(detail::checked_mul(out, 10), v[i] - '0');
            }
            return neg ? -out : out;
        };
        if (slash == std::string_view::npos) return Rational(parse_int(s));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

private:
    void assign(int64_t n, int64_t d) {
        if (d == 0) throw std::domain_error("Rational with zero denominator");
        from128_into(n, d, *this);
    }
    static Rational from128(__int128 n, __int128 d) {
        Rational r;
        from128_into(n, d, r);
        return r;
    }
    static void from128_into(__int128 n, __int128 d, Rational& r) {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        __int128 a = n < 0 ? -n : n, b = d;
        while (b != 0) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        __int128 g = a == 0 ? 1 : a;
        r.num_ = detail::narrow(n / g);
        r.den_ = detail::narrow(d / g);
    }

    int64_t num_ = 0;
    int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

inline int64_t lcm64(int64_t a, int64_t b) {
    if (a == 0 || b == 0) return 0;
    return detail::checked_mul(a / std::gcd(a, b), b);
}

/// Largest r with a, b both integer multiples of r (a, b not both zero).
inline Rational rational_gcd(const Rational& a, const Rational& b) {
    if (a.is_zero()) return b.sign() < 0 ? -b : b;
    if (b.is_zero()) return a.sign() < 0 ? -a : a;
    int64_t l = lcm64(a.den(), b.den());
    int64_t an = detail::checked_mul(a.num(), l / a.den());
    int64_t bn = detail::checked_mul(b.num(), l / b.den());
    return Rational(std::gcd(an, bn), l);
}

}  // namespace pogcat

template <>
struct std::hash<pogcat::Rational> {
    size_t operator()(const pogcat::Rational& r) const noexcept {
        return std::hash<int64_t>{}(r.num()) * 1000003u ^ std::hash<int64_t>{}(r.den());
    }
};
