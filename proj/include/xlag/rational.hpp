#ifndef XLAG_RATIONAL_HPP
#define XLAG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "xlag/errors.hpp"

namespace xlag {

/// Exact rational scalar. cpp_rational keeps lowest terms with a positive
/// denominator by construction, which is exactly the invariant we need.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    return Rational(num, den);
}

/// Serialized as "p/q", or just "p" when q = 1.
inline std::string to_string(const Rational& r) {
    return r.str();
}

inline Rational rat_parse(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw Error("cannot parse rational '" + s + "'");
    }
}

inline int sign(const Rational& r) {
    return r.sign();
}

inline Rational rat_abs(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

inline bool is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw Error("0 raised to negative power");
    Rational b = exp < 0 ? Rational(1) / base : base;
    unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
    Rational acc(1);
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline Rational factorial(unsigned n) {
    Rational acc(1);
    for (unsigned k = 2; k <= n; ++k) acc *= k;
    return acc;
}

/// Generalized binomial C(a, k) for rational a: falling factorial over k!.
inline Rational binom(const Rational& a, unsigned k) {
    Rational acc(1);
    for (unsigned j = 0; j < k; ++j) acc *= (a - Rational(j));
    return acc / factorial(k);
}

} // namespace xlag

#endif
