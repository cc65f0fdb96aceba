#pragma once

#include "skewpbw/module.hpp"

namespace skewpbw {

struct DivisionResult {
    std::vector<Poly> quotients;
    VectorA remainder;
};

// Division with remainder in A^m. Left: f = sum_k q_k g_k + r; right:
// f = sum_k g_k q_k + r (computed over the opposite algebra). No term of r has
// module monomial divisible by any lm(g_k) (same position, componentwise <=
// exponents); lm(q_k g_k) <= lm(f). Deterministic: the eligible divisor with
// the smallest index is used at each step. Empty G returns r = f.
//
// content_split limits the intermediate content-stripping to the coordinates
// below the split (used by the lifted syzygy computation, whose tail
// coordinates must not feed the quotient factors); negative means the whole
// vector.
DivisionResult divide(const AlgebraPtr& a, Side side, const VectorA& f,
                      const std::vector<VectorA>& divisors, int content_split = -1);

} // namespace skewpbw
