#include "skewpbw/poly.hpp"

#include <algorithm>

namespace skewpbw {

bool Poly::operator==(const Poly& o) const {
    if (terms.size() != o.terms.size())
        return false;
    for (size_t i = 0; i < terms.size(); ++i)
        if (terms[i].mono != o.terms[i].mono || terms[i].coeff != o.terms[i].coeff)
            return false;
    return true;
}

Poly poly_zero() { return {}; }

Poly poly_constant(const Rational& c, int nvars) {
    Poly p;
    if (!is_zero(c))
        p.terms.push_back({c, Monomial(nvars)});
    return p;
}

Poly poly_term(const Rational& c, const Monomial& m) {
    Poly p;
    if (!is_zero(c))
        p.terms.push_back({c, m});
    return p;
}

Poly poly_normalize(const OrderSpec& o, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return compare(o, a.mono, b.mono) > 0; });
    Poly out;
    for (auto& t : terms) {
        if (is_zero(t.coeff))
            continue;
        if (!out.terms.empty() && out.terms.back().mono == t.mono) {
            out.terms.back().coeff += t.coeff;
            if (is_zero(out.terms.back().coeff))
                out.terms.pop_back();
        } else {
            out.terms.push_back(std::move(t));
        }
    }
    return out;
}

Poly poly_add(const OrderSpec& o, const Poly& a, const Poly& b) {
    Poly out;
    out.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() && j < b.terms.size()) {
        int c = compare(o, a.terms[i].mono, b.terms[j].mono);
        if (c > 0) {
            out.terms.push_back(a.terms[i++]);
        } else if (c < 0) {
            out.terms.push_back(b.terms[j++]);
        } else {
            Rational s = a.terms[i].coeff + b.terms[j].coeff;
            if (!is_zero(s))
                out.terms.push_back({s, a.terms[i].mono});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i)
        out.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j)
        out.terms.push_back(b.terms[j]);
    return out;
}

Poly poly_sub(const OrderSpec& o, const Poly& a, const Poly& b) { return poly_add(o, a, poly_neg(b)); }

Poly poly_neg(const Poly& a) {
    Poly out = a;
    for (auto& t : out.terms)
        t.coeff = -t.coeff;
    return out;
}

Poly poly_scale(const Poly& a, const Rational& c) {
    if (is_zero(c))
        return {};
    Poly out = a;
    for (auto& t : out.terms)
        t.coeff *= c;
    return out;
}

uint64_t poly_total_degree(const Poly& a) {
    uint64_t d = 0;
    for (auto& t : a.terms)
        d = std::max(d, t.mono.total_degree());
    return d;
}

} // namespace skewpbw
