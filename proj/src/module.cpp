#include "skewpbw/module.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

bool VectorA::is_zero() const {
    for (const auto& p : entries)
        if (!p.is_zero())
            return false;
    return true;
}

bool MatrixA::is_zero() const {
    for (const auto& c : cols)
        if (!c.is_zero())
            return false;
    return true;
}

VectorA vec_zero(int rank) { return VectorA(rank); }

VectorA vec_unit(const Algebra& a, int rank, int pos) {
    VectorA v(rank);
    v.entries[pos] = poly_one(a);
    return v;
}

VectorA vec_add(const Algebra& a, const VectorA& u, const VectorA& v) {
    if (u.rank() != v.rank())
        fail(ErrorCode::rank_mismatch, "vector ranks differ");
    VectorA out(u.rank());
    for (int i = 0; i < u.rank(); ++i)
        out.entries[i] = poly_add(a.order(), u.entries[i], v.entries[i]);
    return out;
}

VectorA vec_sub(const Algebra& a, const VectorA& u, const VectorA& v) {
    return vec_add(a, u, vec_neg(v));
}

VectorA vec_neg(const VectorA& u) {
    VectorA out = u;
    for (auto& p : out.entries)
        p = poly_neg(p);
    return out;
}

VectorA vec_scale(const VectorA& u, const Rational& c) {
    VectorA out = u;
    for (auto& p : out.entries)
        p = poly_scale(p, c);
    return out;
}

VectorA vec_mul_term(const Algebra& a, Side side, const Term& t, const VectorA& v) {
    VectorA out(v.rank());
    for (int i = 0; i < v.rank(); ++i)
        out.entries[i] = side == Side::left ? multiply_term(a, t, v.entries[i])
                                            : multiply_poly_term(a, v.entries[i], t);
    return out;
}

VectorA vec_mul_poly(const Algebra& a, Side side, const Poly& f, const VectorA& v) {
    VectorA out(v.rank());
    for (int i = 0; i < v.rank(); ++i)
        out.entries[i] = side == Side::left ? multiply(a, f, v.entries[i])
                                            : multiply(a, v.entries[i], f);
    return out;
}

std::pair<Rational, ModuleMonomial> leading_term(const Algebra& a, const VectorA& f) {
    std::optional<ModuleMonomial> best;
    Rational coeff;
    for (int pos = 0; pos < f.rank(); ++pos) {
        const Poly& p = f.entries[pos];
        if (p.is_zero())
            continue;
        ModuleMonomial mm{p.leading().mono, pos};
        if (!best || compare(a.order(), mm, *best, f.rank()) > 0) {
            best = mm;
            coeff = p.leading().coeff;
        }
    }
    if (!best)
        fail(ErrorCode::zero_vector, "leading term of the zero vector");
    return {coeff, *best};
}

MatrixA mat_zero(int rows, int ncols) {
    MatrixA m(rows);
    m.cols.assign(ncols, VectorA(rows));
    return m;
}

MatrixA mat_identity(const Algebra& a, int n) {
    MatrixA m(n);
    for (int i = 0; i < n; ++i)
        m.cols.push_back(vec_unit(a, n, i));
    return m;
}

MatrixA mat_from_cols(int rows, std::vector<VectorA> cols) {
    MatrixA m(rows);
    for (auto& c : cols) {
        if (c.rank() != rows)
            fail(ErrorCode::rank_mismatch, "column rank does not match matrix rows");
        m.cols.push_back(std::move(c));
    }
    return m;
}

MatrixA mat_hconcat(const MatrixA& a, const MatrixA& b) {
    if (a.rows != b.rows)
        fail(ErrorCode::rank_mismatch, "cannot concatenate matrices with different row counts");
    MatrixA m = a;
    for (const auto& c : b.cols)
        m.cols.push_back(c);
    return m;
}

MatrixA mat_transpose(const MatrixA& m) {
    MatrixA out(m.ncols());
    out.cols.assign(m.rows, VectorA(m.ncols()));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.ncols(); ++c)
            out.at(c, r) = m.at(r, c);
    return out;
}

MatrixA mat_prune_zero_cols(const MatrixA& m) {
    MatrixA out(m.rows);
    for (const auto& c : m.cols)
        if (!c.is_zero())
            out.cols.push_back(c);
    return out;
}

MatrixA mat_take_rows(const MatrixA& m, int count) {
    MatrixA out(count);
    for (const auto& c : m.cols) {
        VectorA v(count);
        for (int i = 0; i < count; ++i)
            v.entries[i] = c.entries[i];
        out.cols.push_back(std::move(v));
    }
    return out;
}

MatrixA kron(const Algebra& a, const MatrixA& p, const MatrixA& q) {
    MatrixA out(p.rows * q.rows);
    out.cols.assign(p.ncols() * q.ncols(), VectorA(out.rows));
    for (int i = 0; i < p.rows; ++i)
        for (int j = 0; j < p.ncols(); ++j)
            for (int k = 0; k < q.rows; ++k)
                for (int l = 0; l < q.ncols(); ++l)
                    out.at(i * q.rows + k, j * q.ncols() + l) = multiply(a, p.at(i, j), q.at(k, l));
    return out;
}

VectorA mat_apply(const Algebra& a, Side side, const MatrixA& m, const VectorA& z) {
    if (m.ncols() != z.rank())
        fail(ErrorCode::rank_mismatch, "coefficient vector length does not match column count");
    VectorA out(m.rows);
    for (int k = 0; k < m.ncols(); ++k) {
        if (z.entries[k].is_zero())
            continue;
        out = vec_add(a, out, vec_mul_poly(a, side, z.entries[k], m.cols[k]));
    }
    return out;
}

VectorA vec_to_opposite(const AlgebraPtr& a, const VectorA& v) {
    VectorA out(v.rank());
    for (int i = 0; i < v.rank(); ++i)
        out.entries[i] = to_opposite(a, v.entries[i]);
    return out;
}

MatrixA mat_to_opposite(const AlgebraPtr& a, const MatrixA& m) {
    MatrixA out(m.rows);
    for (const auto& c : m.cols)
        out.cols.push_back(vec_to_opposite(a, c));
    return out;
}

} // namespace skewpbw
