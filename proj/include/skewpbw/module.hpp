#pragma once

#include "skewpbw/algebra.hpp"

#include <optional>

namespace skewpbw {

// Column vector over A; rank = entries.size().
struct VectorA {
    std::vector<Poly> entries;

    VectorA() = default;
    explicit VectorA(int rank) : entries(rank) {}

    int rank() const { return static_cast<int>(entries.size()); }
    bool is_zero() const;

    bool operator==(const VectorA& o) const { return entries == o.entries; }
};

// Matrix over A, stored as columns; the columns are module generators. rows is
// explicit so empty matrices keep their shape (m x 0).
struct MatrixA {
    int rows = 0;
    std::vector<VectorA> cols;

    MatrixA() = default;
    explicit MatrixA(int rows_) : rows(rows_) {}
    MatrixA(int rows_, std::vector<VectorA> cols_) : rows(rows_), cols(std::move(cols_)) {}

    int ncols() const { return static_cast<int>(cols.size()); }
    const Poly& at(int r, int c) const { return cols[c].entries[r]; }
    Poly& at(int r, int c) { return cols[c].entries[r]; }
    bool is_zero() const;

    bool operator==(const MatrixA& o) const { return rows == o.rows && cols == o.cols; }
};

VectorA vec_zero(int rank);
VectorA vec_unit(const Algebra& a, int rank, int pos); // e_{pos+1}
VectorA vec_add(const Algebra& a, const VectorA& u, const VectorA& v);
VectorA vec_sub(const Algebra& a, const VectorA& u, const VectorA& v);
VectorA vec_neg(const VectorA& u);
VectorA vec_scale(const VectorA& u, const Rational& c);
// t * v (left) or v * t (right)
VectorA vec_mul_term(const Algebra& a, Side side, const Term& t, const VectorA& v);
// f * v entrywise on the given side
VectorA vec_mul_poly(const Algebra& a, Side side, const Poly& f, const VectorA& v);

std::pair<Rational, ModuleMonomial> leading_term(const Algebra& a, const VectorA& f);

MatrixA mat_zero(int rows, int ncols = 0);
MatrixA mat_identity(const Algebra& a, int n);
MatrixA mat_from_cols(int rows, std::vector<VectorA> cols);
MatrixA mat_hconcat(const MatrixA& a, const MatrixA& b);
MatrixA mat_transpose(const MatrixA& m); // entrywise-literal
MatrixA mat_prune_zero_cols(const MatrixA& m);
MatrixA mat_take_rows(const MatrixA& m, int count); // first `count` coordinates of each column

// Kronecker product: entry ((i)*c + k, (j)*d + l) = P[i][j] * Q[k][l].
MatrixA kron(const Algebra& a, const MatrixA& p, const MatrixA& q);

// Side-appropriate combination of m's columns with coefficient vector z:
// left: sum_k z_k * m[:,k]; right: sum_k m[:,k] * z_k.
VectorA mat_apply(const Algebra& a, Side side, const MatrixA& m, const VectorA& z);

VectorA vec_map(const AlgebraPtr& a, const VectorA& v, Poly (*f)(const AlgebraPtr&, const Poly&));
VectorA vec_to_opposite(const AlgebraPtr& a, const VectorA& v);
MatrixA mat_to_opposite(const AlgebraPtr& a, const MatrixA& m);

} // namespace skewpbw
