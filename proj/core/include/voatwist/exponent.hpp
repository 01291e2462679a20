#ifndef VOATWIST_EXPONENT_HPP
#define VOATWIST_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "voatwist/rational.hpp"

namespace voatwist {

/// Exact exponent in (1/D)Z for the session denominator D. Kept as a reduced
/// fraction with small components; series and curve code assert D-divisibility
/// where a session D is in force.
struct Exponent {
    long long num = 0;
    long long den = 1;

    constexpr Exponent() = default;
    constexpr Exponent(long long n) : num(n), den(1) {}
    Exponent(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Exponent: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool divides_session(long long D) const { return D % den == 0; }

    long long floor() const {
        if (num >= 0) return num / den;
        return -(((-num) + den - 1) / den);
    }

    Rational to_rational() const { return Rational(num, den); }
    static Exponent from_rational(const Rational& q) {
        return Exponent(static_cast<long long>(numerator(q)),
                        static_cast<long long>(denominator(q)));
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend Exponent operator+(const Exponent& a, const Exponent& b) {
        return Exponent(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Exponent operator-(const Exponent& a, const Exponent& b) {
        return Exponent(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    Exponent operator-() const { Exponent e; e.num = -num; e.den = den; return e; }
    friend Exponent operator*(long long k, const Exponent& a) {
        return Exponent(k * a.num, a.den);
    }
    Exponent& operator+=(const Exponent& b) { *this = *this + b; return *this; }
    Exponent& operator-=(const Exponent& b) { *this = *this - b; return *this; }

    friend auto operator<=>(const Exponent& a, const Exponent& b) {
        return (a.num * b.den) <=> (b.num * a.den);
    }
    friend bool operator==(const Exponent& a, const Exponent& b) {
        return a.num == b.num && a.den == b.den;
    }
};

inline Exponent parse_exponent(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Exponent(std::stoll(s));
    return Exponent(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

/// Guaranteed-exact range of a series: the true object has no support below
/// `lo`, and stored terms are exact up to `hi` inclusive.
struct Window {
    Exponent lo, hi;

    static Window all() {
        Window w;
        w.lo = Exponent(std::numeric_limits<long long>::min() / 4);
        w.hi = Exponent(std::numeric_limits<long long>::max() / 4);
        return w;
    }
    bool contains(const Exponent& e) const { return lo <= e && e <= hi; }

    friend Window intersect_add(const Window& a, const Window& b) {
        Window w;
        w.lo = std::min(a.lo, b.lo);
        w.hi = std::min(a.hi, b.hi);
        return w;
    }
    friend Window combine_mul(const Window& a, const Window& b) {
        Window w;
        w.lo = a.lo + b.lo;
        w.hi = std::min(a.hi + b.lo, b.hi + a.lo);
        return w;
    }
};

} // namespace voatwist

#endif
