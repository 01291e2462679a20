#include "voatwist/rational.hpp"

namespace voatwist {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(num, den);
}

Rational binomial(const Rational& alpha, long long j) {
    if (j < 0) return Rational(0);
    Rational acc(1);
    for (long long i = 0; i < j; ++i) acc *= (alpha - i);
    return acc / Rational(factorial(j));
}

BigInt factorial(long long n) {
    BigInt acc(1);
    for (long long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

Rational rat_pow(const Rational& q, long long e) {
    if (e == 0) return Rational(1);
    if (q == 0) {
        if (e < 0) throw std::domain_error("rat_pow: negative power of zero");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / q : q;
    long long n = e < 0 ? -e : e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

} // namespace voatwist
