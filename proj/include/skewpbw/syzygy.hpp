#pragma once

#include "skewpbw/groebner.hpp"

namespace skewpbw {

// A^rank / <delta columns> on the given side. gens, when present, are the
// original generator columns (ambient module) the presentation was derived
// from. `complete` marks presentations that are already full free resolutions
// (no higher syzygies; used by transposed modules, where the chain continues
// with zero matrices of the deduced shape).
struct Presentation {
    Side side = Side::left;
    int rank = 0;    // s: number of generators
    MatrixA delta;   // s x s1
    std::optional<MatrixA> gens; // m x s
    bool complete = false;
};

// Generators of Syz(F) (left: sum z_i f_i = 0) or Syz^r(F) (right:
// sum f_i z_i = 0), assembled as [H*Syz(G) | I_s - HQ] from the Groebner basis
// G of the columns with provenance H and division coefficients Q. Zero columns
// are pruned; the result keeps explicit shape s x *.
MatrixA syzygy(const AlgebraPtr& a, Side side, const MatrixA& f);

Presentation presentation(const AlgebraPtr& a, Side side, const MatrixA& gens);

// Generators of Syz(M/N) per the first-coordinates rule: columns of
// syzygy([F | G]) truncated to the first cols(F) coordinates.
MatrixA quotient_syzygy(const AlgebraPtr& a, Side side, const MatrixA& f, const MatrixA& g);

struct Resolution {
    Side side = Side::left;
    Presentation start;
    // mats[0] = F1 = start.delta, mats[r] = F_{r+1} = Syz(F_r); the last entry
    // has zero columns when the resolution terminated.
    std::vector<MatrixA> mats;
    bool complete = false;

    // number of nonzero matrices
    int length() const;
};

// Extends F1 = start.delta by iterated syzygies until a zero syzygy module is
// reached; throws length_exceeded past max_len steps (the partial chain is in
// the exception message only).
Resolution free_resolution(const AlgebraPtr& a, const Presentation& start, int max_len);

// F_{index} for index >= 1, continuing a terminated chain with empty matrices
// of the deduced shape.
MatrixA resolution_matrix(const Resolution& r, int index);

struct SubquotientData {
    Side side = Side::left;
    MatrixA numerator;   // X
    MatrixA denominator; // Y, <Y> contained in <X>
};

// True iff every column of X lies in <Y>; verifies the containment
// <Y> subset of <X> first (containment_violation otherwise).
bool is_zero_quotient(const AlgebraPtr& a, const SubquotientData& q);

} // namespace skewpbw
