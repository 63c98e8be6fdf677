#pragma once

#include <gmpxx.h>

#include <string>

#include "cocyclelab/errors.hpp"

namespace cocyclelab {

// Exact arbitrary-precision rational scalar. GMP keeps the canonical form
// (gcd(|num|, den) = 1, den > 0, zero = 0/1) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline int sign(const Rational& r) { return sgn(r); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational out(1);
    Rational b = base;
    unsigned e = exp;
    while (e != 0) {
        if (e & 1u) out *= b;
        b *= b;
        e >>= 1u;
    }
    return out;
}

// Canonical rendering: "-2", "1/2", "0".
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace cocyclelab
