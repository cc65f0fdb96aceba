#include "skewpbw/division.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

// Rescale v to coprime integer coefficients and return the factor applied.
// Keeps the division loop's bignum sizes flat; the true quotients/remainder
// are recovered through the accumulated scale.
Rational strip_content(VectorA& v, int content_split) {
    int upto = content_split < 0 ? v.rank() : std::min(content_split, v.rank());
    Integer num_gcd = 0, den_lcm = 1;
    for (int i = 0; i < upto; ++i) {
        for (const auto& t : v.entries[i].terms) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
    }
    if (num_gcd == 0 && upto < v.rank()) {
        // nothing left below the split: normalize on the whole vector
        for (int i = upto; i < v.rank(); ++i) {
            for (const auto& t : v.entries[i].terms) {
                mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
            }
        }
    }
    if (num_gcd == 0)
        return rational(1);
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (!is_one(factor))
        v = vec_scale(v, factor);
    return factor;
}

DivisionResult divide_left(const AlgebraPtr& a, const VectorA& f,
                           const std::vector<VectorA>& divisors, int content_split) {
    const OrderSpec& order = a->order();
    int rank = f.rank();
    std::vector<std::pair<Rational, ModuleMonomial>> lead;
    lead.reserve(divisors.size());
    for (const auto& g : divisors) {
        if (g.rank() != rank)
            fail(ErrorCode::rank_mismatch, "divisor rank does not match dividend");
        lead.push_back(leading_term(*a, g));
    }

    DivisionResult out;
    out.quotients.assign(divisors.size(), poly_zero());
    out.remainder = vec_zero(rank);
    VectorA work = f;
    Rational scale = strip_content(work, content_split); // work = scale * (remaining dividend)

    while (!work.is_zero()) {
        auto [c, mm] = leading_term(*a, work);
        int found = -1;
        for (size_t k = 0; k < divisors.size(); ++k) {
            if (lead[k].second.pos == mm.pos && mono_divides(lead[k].second.mono, mm.mono)) {
                found = static_cast<int>(k);
                break;
            }
        }
        if (found < 0) {
            Poly t = poly_term(c / scale, mm.mono);
            out.remainder.entries[mm.pos] = poly_add(order, out.remainder.entries[mm.pos], t);
            work.entries[mm.pos] =
                poly_sub(order, work.entries[mm.pos], poly_term(c, mm.mono));
            continue;
        }
        Monomial gamma = mono_diff(mm.mono, lead[found].second.mono);
        VectorA scaled = vec_mul_term(*a, Side::left, {rational(1), gamma}, divisors[found]);
        Rational kappa = leading_term(*a, scaled).first;
        Rational factor = c / kappa;
        out.quotients[found] =
            poly_add(order, out.quotients[found], poly_term(factor / scale, gamma));
        work = vec_sub(*a, work, vec_scale(scaled, factor));
        scale *= strip_content(work, content_split);
    }
    return out;
}

} // namespace

DivisionResult divide(const AlgebraPtr& a, Side side, const VectorA& f,
                      const std::vector<VectorA>& divisors, int content_split) {
    if (side == Side::left)
        return divide_left(a, f, divisors, content_split);
    AlgebraPtr op = opposite_algebra(a);
    std::vector<VectorA> odiv;
    odiv.reserve(divisors.size());
    for (const auto& g : divisors)
        odiv.push_back(vec_to_opposite(a, g));
    DivisionResult r = divide_left(op, vec_to_opposite(a, f), odiv, content_split);
    DivisionResult out;
    out.remainder = vec_to_opposite(op, r.remainder);
    for (auto& q : r.quotients)
        out.quotients.push_back(to_opposite(op, q));
    return out;
}

} // namespace skewpbw
