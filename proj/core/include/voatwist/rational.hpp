#ifndef VOATWIST_RATIONAL_HPP
#define VOATWIST_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace voatwist {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline long long to_ll(const Rational& q) {
    if (!is_integer(q)) throw std::invalid_argument("to_ll: not an integer");
    return static_cast<long long>(numerator(q));
}

/// Renders "a" for integers, "a/b" otherwise. No decimals anywhere.
inline std::string rat_str(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& s);

/// Generalized binomial coefficient binom(alpha, j) = alpha(alpha-1)...(alpha-j+1)/j!.
Rational binomial(const Rational& alpha, long long j);

BigInt factorial(long long n);

/// q^e for integer e (e may be negative; q must be nonzero then).
Rational rat_pow(const Rational& q, long long e);

} // namespace voatwist

#endif
