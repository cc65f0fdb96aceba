#pragma once

#include "skewpbw/error.hpp"

#include <cstdint>
#include <vector>

namespace skewpbw {

// Exponent vector alpha in N^n; the PBW monomial x_1^{a_1} ... x_n^{a_n}.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}

    int nvars() const { return static_cast<int>(e.size()); }
    bool is_one() const;
    uint64_t total_degree() const;

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial mono_sum(const Monomial& a, const Monomial& b);
// requires divides(b, a)
Monomial mono_diff(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& divisor, const Monomial& multiple);
Monomial mono_var(int nvars, int idx, uint32_t power = 1);

// A term position in the free module A^m: monomial at basis index pos (0-based,
// position 0 renders as e1).
struct ModuleMonomial {
    Monomial mono;
    int pos = 0;

    bool operator==(const ModuleMonomial& o) const { return pos == o.pos && mono == o.mono; }
};

enum class BaseOrder { deglex, lex, degrevlex };
enum class ModuleStrategy { top, pot };

// Monomial order plus module order. var_priority lists variable indices from
// most to least significant (empty = declaration order). position_priority
// lists positions from most to least significant; it applies only to module
// monomials of matching ambient rank -- computed modules of other ranks fall
// back to the default descending-index order (e_m > ... > e_1).
struct OrderSpec {
    BaseOrder base = BaseOrder::deglex;
    std::vector<int> var_priority;
    ModuleStrategy strategy = ModuleStrategy::top;
    std::vector<int> position_priority;
    // when positive, positions below the split dominate positions at or above
    // it (block elimination order used by the lifted syzygy computation)
    int block_split = 0;
};

// -1 / 0 / +1 for a < b, a == b, a > b. rank is the ambient module rank; an
// explicit position_priority is honored only when its length equals rank.
int compare(const OrderSpec& o, const Monomial& a, const Monomial& b);
int compare(const OrderSpec& o, const ModuleMonomial& a, const ModuleMonomial& b, int rank);

inline bool mono_less(const OrderSpec& o, const Monomial& a, const Monomial& b) {
    return compare(o, a, b) < 0;
}
inline bool mm_less(const OrderSpec& o, const ModuleMonomial& a, const ModuleMonomial& b, int rank) {
    return compare(o, a, b, rank) < 0;
}

} // namespace skewpbw
