#include "skewpbw/syzygy.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

MatrixA syzygy(const AlgebraPtr& a, Side side, const MatrixA& f) {
    if (side == Side::left) {
        MatrixA out(f.ncols());
        out.cols = groebner_syzygies_left(a, f.cols, f.rows);
        return mat_prune_zero_cols(out);
    }
    AlgebraPtr op = opposite_algebra(a);
    MatrixA of = mat_to_opposite(a, f);
    MatrixA out(f.ncols());
    out.cols = groebner_syzygies_left(op, of.cols, of.rows);
    return mat_to_opposite(op, mat_prune_zero_cols(out));
}

Presentation presentation(const AlgebraPtr& a, Side side, const MatrixA& gens) {
    Presentation p;
    p.side = side;
    p.rank = gens.ncols();
    p.delta = syzygy(a, side, gens);
    p.gens = gens;
    return p;
}

MatrixA quotient_syzygy(const AlgebraPtr& a, Side side, const MatrixA& f, const MatrixA& g) {
    if (f.rows != g.rows)
        fail(ErrorCode::rank_mismatch, "numerator and denominator generators have different rank");
    MatrixA z = syzygy(a, side, mat_hconcat(f, g));
    return mat_prune_zero_cols(mat_take_rows(z, f.ncols()));
}

int Resolution::length() const {
    int len = 0;
    for (const auto& m : mats)
        if (m.ncols() > 0)
            ++len;
    return len;
}

Resolution free_resolution(const AlgebraPtr& a, const Presentation& start, int max_len) {
    Resolution r;
    r.side = start.side;
    r.start = start;
    r.mats.push_back(start.delta);
    if (start.complete) {
        r.complete = true;
        return r;
    }
    while (r.mats.back().ncols() > 0) {
        if (static_cast<int>(r.mats.size()) > max_len)
            fail(ErrorCode::length_exceeded,
                 "free resolution did not terminate within " + std::to_string(max_len) +
                     " steps");
        r.mats.push_back(syzygy(a, start.side, r.mats.back()));
    }
    r.complete = true;
    return r;
}

MatrixA resolution_matrix(const Resolution& r, int index) {
    if (index < 1)
        fail(ErrorCode::bad_argument, "resolution matrices are indexed from 1");
    if (index <= static_cast<int>(r.mats.size()))
        return r.mats[index - 1];
    // past the end: zero map out of the previous module's column count
    MatrixA prev = resolution_matrix(r, index - 1);
    return mat_zero(prev.ncols(), 0);
}

bool is_zero_quotient(const AlgebraPtr& a, const SubquotientData& q) {
    if (q.numerator.rows != q.denominator.rows)
        fail(ErrorCode::rank_mismatch, "subquotient parts live in different ambient ranks");
    GroebnerBasis gx = buchberger(a, q.side, q.numerator);
    for (const auto& c : q.denominator.cols)
        if (!member(gx, c))
            fail(ErrorCode::containment_violation,
                 "denominator is not contained in the numerator module");
    GroebnerBasis gy = buchberger(a, q.side, q.denominator);
    for (const auto& c : q.numerator.cols)
        if (!member(gy, c))
            return false;
    return true;
}

} // namespace skewpbw
