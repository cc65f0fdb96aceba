#pragma once

#include <gmpxx.h>
#include <string>

namespace skewpbw {

// Exact rational coefficients. mpq arithmetic keeps results canonical
// (gcd-reduced, positive denominator) as long as inputs are canonical,
// so construction is funneled through the helpers below.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& text);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

std::string to_string(const Rational& r);

} // namespace skewpbw
