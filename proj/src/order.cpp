#include "skewpbw/order.hpp"

namespace skewpbw {

bool Monomial::is_one() const {
    for (auto v : e)
        if (v)
            return false;
    return true;
}

uint64_t Monomial::total_degree() const {
    uint64_t d = 0;
    for (auto v : e)
        d += v;
    return d;
}

Monomial mono_sum(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] += b.e[i];
    return r;
}

Monomial mono_diff(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] -= b.e[i];
    return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i)
        r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
}

bool mono_divides(const Monomial& divisor, const Monomial& multiple) {
    for (size_t i = 0; i < divisor.e.size(); ++i)
        if (divisor.e[i] > multiple.e[i])
            return false;
    return true;
}

Monomial mono_var(int nvars, int idx, uint32_t power) {
    Monomial m(nvars);
    m.e[idx] = power;
    return m;
}

namespace {

int cmp_u64(uint64_t a, uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

int lex_scan(const OrderSpec& o, const Monomial& a, const Monomial& b) {
    int n = a.nvars();
    if (!o.var_priority.empty()) {
        for (int idx : o.var_priority) {
            if (a.e[idx] != b.e[idx])
                return a.e[idx] < b.e[idx] ? -1 : 1;
        }
        return 0;
    }
    for (int idx = 0; idx < n; ++idx)
        if (a.e[idx] != b.e[idx])
            return a.e[idx] < b.e[idx] ? -1 : 1;
    return 0;
}

// Reverse scan from the least significant variable: the monomial with the
// smaller exponent there is the larger one.
int revlex_scan(const OrderSpec& o, const Monomial& a, const Monomial& b) {
    int n = a.nvars();
    if (!o.var_priority.empty()) {
        for (auto it = o.var_priority.rbegin(); it != o.var_priority.rend(); ++it) {
            int idx = *it;
            if (a.e[idx] != b.e[idx])
                return a.e[idx] < b.e[idx] ? 1 : -1;
        }
        return 0;
    }
    for (int idx = n - 1; idx >= 0; --idx)
        if (a.e[idx] != b.e[idx])
            return a.e[idx] < b.e[idx] ? 1 : -1;
    return 0;
}

int position_cmp(const OrderSpec& o, int pa, int pb, int rank) {
    if (pa == pb)
        return 0;
    int prio_rank = static_cast<int>(o.position_priority.size());
    if (prio_rank > 0 && prio_rank == rank) {
        for (int pos : o.position_priority) {
            if (pos == pa)
                return 1;
            if (pos == pb)
                return -1;
        }
    }
    // default: e_m > ... > e_1
    return pa < pb ? -1 : 1;
}

} // namespace

int compare(const OrderSpec& o, const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars())
        fail(ErrorCode::rank_mismatch, "monomials over different variable counts");
    switch (o.base) {
    case BaseOrder::lex:
        return lex_scan(o, a, b);
    case BaseOrder::deglex: {
        if (int c = cmp_u64(a.total_degree(), b.total_degree()))
            return c;
        return lex_scan(o, a, b);
    }
    case BaseOrder::degrevlex: {
        if (int c = cmp_u64(a.total_degree(), b.total_degree()))
            return c;
        return revlex_scan(o, a, b);
    }
    }
    return 0;
}

int compare(const OrderSpec& o, const ModuleMonomial& a, const ModuleMonomial& b, int rank) {
    if (o.block_split > 0) {
        bool a_lead = a.pos < o.block_split, b_lead = b.pos < o.block_split;
        if (a_lead != b_lead)
            return a_lead ? 1 : -1;
        // within the leading block the original order applies; the tail block
        // compares with default positions
        if (a_lead)
            rank = o.block_split;
        else {
            OrderSpec tail = o;
            tail.block_split = 0;
            tail.position_priority.clear();
            ModuleMonomial at{a.mono, a.pos - o.block_split};
            ModuleMonomial bt{b.mono, b.pos - o.block_split};
            return compare(tail, at, bt, rank - o.block_split);
        }
    }
    if (o.strategy == ModuleStrategy::top) {
        if (int c = compare(o, a.mono, b.mono))
            return c;
        return position_cmp(o, a.pos, b.pos, rank);
    }
    if (int c = position_cmp(o, a.pos, b.pos, rank))
        return c;
    return compare(o, a.mono, b.mono);
}

} // namespace skewpbw
