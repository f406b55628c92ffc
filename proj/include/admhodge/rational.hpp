#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace admhodge {

/// Arbitrary-precision signed integer. Everything in this library is exact;
/// there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator. Equality is structural equality of that normal form.
using Rational = boost::multiprecision::cpp_rational;

/// Builds the normalized rational n/d. Throws std::domain_error when d == 0.
inline Rational rat(Int n, Int d) {
    if (d == 0)
        throw std::domain_error("rat: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(std::move(n), std::move(d));
}

inline Rational rat(long long n, long long d) { return rat(Int(n), Int(d)); }

inline Int num(const Rational& q) { return numerator(q); }
inline Int den(const Rational& q) { return denominator(q); }

/// "p/q", or just "p" for integers.
inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

} // namespace admhodge
