#pragma once

#include "skewpbw/division.hpp"

#include <optional>

namespace skewpbw {

// Reduced Groebner basis of the side-module generated by a list of vectors,
// with provenance: elements[k] is the side-appropriate combination of the
// original generators with coefficients provenance.cols[k] (left:
// sum_i H[i][k] f_i; right: sum_i f_i H[i][k]).
struct GroebnerBasis {
    AlgebraPtr algebra;
    Side side = Side::left;
    int rank = 0;
    std::vector<VectorA> elements;
    MatrixA provenance; // s x p, s = number of input generators
};

GroebnerBasis buchberger(const AlgebraPtr& a, Side side, const std::vector<VectorA>& gens,
                         int rank);
inline GroebnerBasis buchberger(const AlgebraPtr& a, Side side, const MatrixA& gens) {
    return buchberger(a, side, gens.cols, gens.rows);
}

// Canonicalize a basis that is already a Groebner basis: monic, interreduced,
// sorted by leading monomial descending. Idempotent.
std::vector<VectorA> reduce_basis(const AlgebraPtr& a, Side side, std::vector<VectorA> basis,
                                  int rank);

bool member(const GroebnerBasis& g, const VectorA& f);

// Generators of the left syzygy module of the columns, produced by the same
// lifted run that backs buchberger; consumed by the syzygy layer.
std::vector<VectorA> groebner_syzygies_left(const AlgebraPtr& a, const std::vector<VectorA>& gens,
                                            int rank);

// <F1> == <F2> as side-modules, decided by mutual membership.
bool module_equal(const AlgebraPtr& a, Side side, const MatrixA& f1, const MatrixA& f2);

// Coefficient-field dimension of A^rank / <G> counted by standard monomials;
// nullopt = infinite.
std::optional<uint64_t> qdimension(const GroebnerBasis& g);
std::optional<uint64_t> qdimension(const AlgebraPtr& a, Side side, const MatrixA& relations,
                                   int rank);

} // namespace skewpbw
