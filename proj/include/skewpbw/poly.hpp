#pragma once

#include "skewpbw/order.hpp"
#include "skewpbw/rational.hpp"

#include <vector>

namespace skewpbw {

struct Term {
    Rational coeff;
    Monomial mono;
};

// Element of A in PBW normal form: terms strictly decreasing under the
// algebra's order, no zero coefficients; zero is the empty sequence.
struct Poly {
    std::vector<Term> terms;

    bool is_zero() const { return terms.empty(); }
    const Term& leading() const { return terms.front(); }

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly poly_zero();
Poly poly_constant(const Rational& c, int nvars);
Poly poly_term(const Rational& c, const Monomial& m);

// Collect, sort descending under o, drop zeros.
Poly poly_normalize(const OrderSpec& o, std::vector<Term> terms);

Poly poly_add(const OrderSpec& o, const Poly& a, const Poly& b);
Poly poly_sub(const OrderSpec& o, const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scale(const Poly& a, const Rational& c);

uint64_t poly_total_degree(const Poly& a); // 0 for the zero polynomial

} // namespace skewpbw
