#pragma once

#include "skewpbw/poly.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

namespace skewpbw {

enum class Side { left, right };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }
inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// A bijective skew PBW extension of the rationals:
//   x_j x_i = c_{ij} x_i x_j + d_{ij}   (i < j, c_{ij} != 0, deg d_{ij} <= 1),
// coefficients central (sigma_i = id, delta_i = 0). Immutable after
// construction; the memo caches are mutex-guarded so shared instances are safe
// to use concurrently.
class Algebra : public std::enable_shared_from_this<Algebra> {
  public:
    int nvars() const { return nvars_; }
    const std::vector<std::string>& names() const { return names_; }
    const OrderSpec& order() const { return order_; }

    const Rational& c(int i, int j) const { return c_[pair_index(i, j)]; } // i < j
    const Poly& d(int i, int j) const { return d_[pair_index(i, j)]; }     // i < j

    bool commutative() const { return commutative_; }

    friend AlgebraPtr build_algebra(int nvars, std::vector<std::string> names,
                                    std::vector<Rational> c, std::vector<Poly> d, OrderSpec order);
    friend AlgebraPtr opposite_algebra(const AlgebraPtr& a);

    // x_j^a * x_i^b in normal form, j > i; memoized.
    Poly pair_power(int j, uint32_t a, int i, uint32_t b) const;

  private:
    Algebra() = default;
    int pair_index(int i, int j) const { return i * nvars_ - i * (i + 1) / 2 + (j - i - 1); }

    int nvars_ = 0;
    std::vector<std::string> names_;
    OrderSpec order_;
    std::vector<Rational> c_;
    std::vector<Poly> d_;
    bool commutative_ = false;

    mutable std::mutex mu_;
    mutable std::map<std::tuple<int, uint32_t, int, uint32_t>, Poly> pair_cache_;
    mutable std::map<std::pair<std::vector<uint32_t>, std::vector<uint32_t>>, Poly> mono_cache_;
    mutable std::shared_ptr<const Algebra> op_;

    friend Poly monomial_product(const Algebra& a, const Monomial& u, const Monomial& v);
};

// Validates: c_{ij} != 0 (zero_constant), deg d_{ij} <= 1 (degree_violation),
// d_{ij} smaller than x_i x_j under the order (order_incompatible; automatic
// for degree-first orders), and the associativity check on all variable
// triples (inconsistent_relations). c and d are indexed by pairs i < j in
// lexicographic order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
AlgebraPtr build_algebra(int nvars, std::vector<std::string> names, std::vector<Rational> c,
                         std::vector<Poly> d, OrderSpec order);

// Convenience: all pairs commute except those set explicitly.
struct RelationSpec {
    int i, j; // i < j
    Rational c;
    Poly d;
};
AlgebraPtr build_algebra(std::vector<std::string> names, std::vector<RelationSpec> rels,
                         OrderSpec order = {});

// PBW normal form of x^u * x^v.
Poly monomial_product(const Algebra& a, const Monomial& u, const Monomial& v);

Poly multiply(const Algebra& a, const Poly& f, const Poly& g);
Poly multiply_term(const Algebra& a, const Term& t, const Poly& g); // t * g
Poly multiply_poly_term(const Algebra& a, const Poly& f, const Term& t); // f * t

inline Poly add(const Algebra& a, const Poly& f, const Poly& g) { return poly_add(a.order(), f, g); }
inline Poly sub(const Algebra& a, const Poly& f, const Poly& g) { return poly_sub(a.order(), f, g); }

Poly poly_var(const Algebra& a, int idx, uint32_t power = 1);
Poly poly_one(const Algebra& a);

// The opposite presentation A^op (same basis Mon(A), c' = 1/c, d' = -d/c);
// multiplying in A^op is reversed multiplication in A. Involutive and cached.
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

// Coordinates of f rewritten in the PBW basis of A^op. Anti-homomorphism:
// to_opposite(f*g) = to_opposite(g) *_op to_opposite(f); involution.
Poly to_opposite(const AlgebraPtr& a, const Poly& f);

// f x_i == x_i f for every generator; with central coefficients this decides
// membership in the center.
bool is_central(const Algebra& a, const Poly& f);

} // namespace skewpbw
