#include "skewpbw/homological.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

void require_centralizing(const AlgebraPtr& a, const Presentation& p, const char* which) {
    if (!p.gens)
        return; // power-user presentation: hypothesis is the caller's business
    for (const auto& col : p.gens->cols)
        for (const auto& entry : col.entries)
            if (!is_central(*a, entry))
                fail(ErrorCode::not_centralizing,
                     std::string(which) + " has a generator entry outside the center");
}

// G_1 .. G_upto with G_1 = delta, padding a terminated (or complete) chain
// with empty matrices of the deduced shape.
std::vector<MatrixA> resolution_prefix(const AlgebraPtr& a, const Presentation& p, int upto) {
    std::vector<MatrixA> mats{p.delta};
    while (static_cast<int>(mats.size()) < upto) {
        if (p.complete || mats.back().ncols() == 0)
            mats.push_back(mat_zero(mats.back().ncols(), 0));
        else
            mats.push_back(syzygy(a, p.side, mats.back()));
    }
    return mats;
}

HomologyResult subquotient_result(const AlgebraPtr& a, Side side, MatrixA numerator,
                                  MatrixA denominator) {
    HomologyResult h;
    h.side = side;
    h.subquotient = {side, std::move(numerator), std::move(denominator)};
    h.ambient = h.subquotient.numerator.ncols();
    h.generators = h.subquotient.numerator.cols;
    h.relations = mat_prune_zero_cols(mat_take_rows(
        syzygy(a, side, mat_hconcat(h.subquotient.numerator, h.subquotient.denominator)),
        h.ambient));
    h.zero = is_zero_quotient(a, h.subquotient);
    return h;
}

} // namespace

Presentation ring_presentation(const AlgebraPtr& a, DeltaAConvention conv) {
    Presentation p;
    p.side = Side::left;
    p.rank = 1;
    if (conv == DeltaAConvention::paper) {
        VectorA one(1);
        one.entries[0] = poly_one(*a);
        p.delta = mat_from_cols(1, {one});
    } else {
        p.delta = mat_zero(1, 0);
    }
    VectorA gen(1);
    gen.entries[0] = poly_one(*a);
    p.gens = mat_from_cols(1, {gen});
    return p;
}

Presentation presentation_from_delta(const AlgebraPtr& a, Side side, int rank, MatrixA delta) {
    (void)a;
    if (delta.rows != rank)
        fail(ErrorCode::shape_mismatch, "presentation matrix row count must equal the rank");
    Presentation p;
    p.side = side;
    p.rank = rank;
    p.delta = std::move(delta);
    return p;
}

HomologyResult tensor_presentation(const AlgebraPtr& a, const Presentation& m,
                                   const Presentation& n) {
    if (m.side != n.side)
        fail(ErrorCode::bad_argument, "tensor factors must be presented on the same side");
    require_centralizing(a, m, "tensor factor M");
    Side side = m.side;
    int s = m.rank, t = n.rank;
    MatrixA is = mat_identity(*a, s);
    MatrixA it = mat_identity(*a, t);
    MatrixA relations =
        mat_prune_zero_cols(mat_hconcat(kron(*a, m.delta, it), kron(*a, is, n.delta)));

    HomologyResult h;
    h.side = side;
    h.ambient = s * t;
    h.subquotient = {side, mat_identity(*a, s * t), relations};
    h.generators = h.subquotient.numerator.cols;
    h.relations = relations;
    h.zero = is_zero_quotient(a, h.subquotient);
    return h;
}

HomologyResult tor(const AlgebraPtr& a, const Presentation& m, const Presentation& n, int r) {
    if (r < 0)
        fail(ErrorCode::bad_argument, "tor degree must be nonnegative");
    if (r == 0)
        return tensor_presentation(a, m, n);
    if (m.side != n.side)
        fail(ErrorCode::bad_argument, "tor arguments must be presented on the same side");
    require_centralizing(a, m, "tor argument M");
    Side side = m.side;
    int s = m.rank;
    MatrixA is = mat_identity(*a, s);

    std::vector<MatrixA> g = resolution_prefix(a, n, r + 1);
    const MatrixA& gr = g[r - 1];
    const MatrixA& gr1 = g[r];
    int t_prev = gr.rows;
    int t_r = gr.ncols();

    MatrixA ker_mat = mat_hconcat(kron(*a, is, gr), kron(*a, m.delta, mat_identity(*a, t_prev)));
    MatrixA numerator =
        mat_prune_zero_cols(mat_take_rows(syzygy(a, side, ker_mat), s * t_r));
    MatrixA denominator =
        mat_hconcat(kron(*a, is, gr1), kron(*a, m.delta, mat_identity(*a, t_r)));
    return subquotient_result(a, side, std::move(numerator), std::move(denominator));
}

HomologyResult hom(const AlgebraPtr& a, const Presentation& m, const Presentation& n) {
    require_centralizing(a, n, "hom target N");
    int s = m.rank, t = n.rank;
    int s1 = m.delta.ncols();
    MatrixA it = mat_identity(*a, t);

    MatrixA ker_mat = mat_hconcat(mat_transpose(kron(*a, m.delta, it)),
                                  kron(*a, mat_identity(*a, s1), n.delta));
    MatrixA u = mat_prune_zero_cols(mat_take_rows(syzygy(a, Side::right, ker_mat), s * t));
    MatrixA denominator = kron(*a, mat_identity(*a, s), n.delta);
    return subquotient_result(a, Side::right, std::move(u), std::move(denominator));
}

HomologyResult ext(const AlgebraPtr& a, const Presentation& m, const Presentation& n, int r) {
    if (r < 0)
        fail(ErrorCode::bad_argument, "ext degree must be nonnegative");
    if (r == 0)
        return hom(a, m, n);
    require_centralizing(a, n, "ext target N");
    int t = n.rank;
    MatrixA it = mat_identity(*a, t);

    std::vector<MatrixA> f = resolution_prefix(a, m, r + 1);
    const MatrixA& fr = f[r - 1];
    const MatrixA& fr1 = f[r];

    MatrixA numerator =
        mat_prune_zero_cols(syzygy(a, Side::right, kron(*a, it, mat_transpose(fr1))));
    MatrixA denominator = kron(*a, it, mat_transpose(fr));
    return subquotient_result(a, Side::right, std::move(numerator), std::move(denominator));
}

} // namespace skewpbw
