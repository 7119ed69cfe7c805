#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace coxspin {

// Exact rational scalar. Always canonical: lowest terms, positive
// denominator, zero is 0/1. GMP keeps arithmetic results canonical;
// only raw construction needs an explicit canonicalize.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a" or "a/b" (arbitrary precision). Throws on malformed input.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace coxspin
