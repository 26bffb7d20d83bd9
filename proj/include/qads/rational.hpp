#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "qads/errors.hpp"

namespace qads {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline std::string to_string(const Rational& r) {
    return r.str();
}

/// Parses "p" or "p/q" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParameterError("cannot parse rational value: '" + s + "'");
    }
}

inline long floor_long(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && n < 0) q -= 1;
    return static_cast<long>(q);
}

inline long ceil_long(const Rational& r) {
    BigInt n = numerator(r), d = denominator(r);
    BigInt q = n / d;
    if (n % d != 0 && n > 0) q += 1;
    return static_cast<long>(q);
}

} // namespace qads
