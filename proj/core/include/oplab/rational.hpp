#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oplab {

/// Exact arbitrary-precision rational, the coefficient type of every series
/// in the library. Backed by GMP; values are always kept in canonical form.
using Rational = mpq_class;

/// Exact arbitrary-precision integer, used for counts and moments.
using BigInt = mpz_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    r.canonicalize();
    return r;
}

}  // namespace oplab
