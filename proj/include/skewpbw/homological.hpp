#pragma once

#include "skewpbw/syzygy.hpp"

namespace skewpbw {

// Presentation of a Tor/Ext/Hom/tensor result: the module is
// A^ambient / <relations> on `side`, generators are the numerator columns of
// the defining subquotient viewed as cosets, and `zero` is the
// is_zero_quotient verdict for that subquotient.
struct HomologyResult {
    Side side = Side::left;
    int ambient = 0;
    MatrixA relations;
    std::vector<VectorA> generators;
    bool zero = true;
    SubquotientData subquotient;
};

// A as a module over itself: rank-1 presentation with gens = [1]. The "paper"
// convention takes delta = [1] (the published worked examples' choice); the
// "empty" convention takes the actual Syz(<1>) = 0 (a 1 x 0 matrix). The two
// give different duals, so the choice is an explicit input.
enum class DeltaAConvention { paper, empty };

Presentation ring_presentation(const AlgebraPtr& a, DeltaAConvention conv);

Presentation presentation_from_delta(const AlgebraPtr& a, Side side, int rank, MatrixA delta);

// M (x) N for a centralizing subbimodule M (generator entries central when M
// carries generators) and a module N on the same side:
// A^{st} / <[Syz(M) (x) I_t | I_s (x) Syz(N)]>, generators f_i (x) g_j ordered
// i-major.
HomologyResult tensor_presentation(const AlgebraPtr& a, const Presentation& m,
                                   const Presentation& n);

// Tor_r(M, N): r = 0 is the tensor presentation; r >= 1 works over a free
// resolution G_* of N, with the Syz(M) blocks carried along so quotient-module
// inputs (power-user presentations) are handled:
//   numerator  = first s*t_r coords of Syz[I_s (x) G_r | Syz(M) (x) I_{t_{r-1}}]
//   denominator = [I_s (x) G_{r+1} | Syz(M) (x) I_{t_r}]
HomologyResult tor(const AlgebraPtr& a, const Presentation& m, const Presentation& n, int r);

// Hom_A(M, N) as a right module: U = first st coordinates of the right
// syzygies of [(Delta_M (x) I_t)^T | I_{s1} (x) Delta_N], modulo
// <I_s (x) Delta_N>.
HomologyResult hom(const AlgebraPtr& a, const Presentation& m, const Presentation& n);

// Ext^r(M, N): r = 0 is hom; r >= 1 resolves M on its own side and dualizes on
// the right: numerator = Syz^r(I_t (x) F_{r+1}^T) modulo <I_t (x) F_r^T>,
// presented by the right-side first-coordinates rule. Matrices beyond the
// resolution length are zero matrices of the deduced shape.
HomologyResult ext(const AlgebraPtr& a, const Presentation& m, const Presentation& n, int r);

} // namespace skewpbw
