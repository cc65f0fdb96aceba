#include "skewpbw/algebra.hpp"

#include "skewpbw/error.hpp"

#include <algorithm>

namespace skewpbw {

namespace {

int last_nonzero(const Monomial& m) {
    for (int i = m.nvars() - 1; i >= 0; --i)
        if (m.e[i])
            return i;
    return -1;
}

int first_nonzero(const Monomial& m) {
    for (int i = 0; i < m.nvars(); ++i)
        if (m.e[i])
            return i;
    return -1;
}

Poly multiply_mono_poly(const Algebra& a, const Monomial& w, const Poly& p) {
    if (w.is_one())
        return p;
    std::vector<Term> acc;
    for (const auto& t : p.terms) {
        Poly part = monomial_product(a, w, t.mono);
        for (auto& u : part.terms)
            acc.push_back({u.coeff * t.coeff, u.mono});
    }
    return poly_normalize(a.order(), std::move(acc));
}

Poly multiply_poly_mono(const Algebra& a, const Poly& p, const Monomial& w) {
    if (w.is_one())
        return p;
    std::vector<Term> acc;
    for (const auto& t : p.terms) {
        Poly part = monomial_product(a, t.mono, w);
        for (auto& u : part.terms)
            acc.push_back({u.coeff * t.coeff, u.mono});
    }
    return poly_normalize(a.order(), std::move(acc));
}

} // namespace

Poly Algebra::pair_power(int j, uint32_t a, int i, uint32_t b) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = pair_cache_.find({j, a, i, b});
        if (it != pair_cache_.end())
            return it->second;
    }
    Poly result;
    if (a == 1 && b == 1) {
        Monomial xij(nvars_);
        xij.e[i] = 1;
        xij.e[j] = 1;
        result = poly_add(order_, poly_term(c(i, j), xij), d(i, j));
    } else if (a > 1) {
        // x_j^a x_i^b = x_j^{a-1} (x_j x_i^b)
        result = multiply_mono_poly(*this, mono_var(nvars_, j, a - 1), pair_power(j, 1, i, b));
    } else {
        // x_j x_i^b = (x_j x_i) x_i^{b-1}
        result = multiply_poly_mono(*this, pair_power(j, 1, i, 1), mono_var(nvars_, i, b - 1));
    }
    std::lock_guard<std::mutex> lock(mu_);
    return pair_cache_.try_emplace({j, a, i, b}, std::move(result)).first->second;
}

Poly monomial_product(const Algebra& a, const Monomial& u, const Monomial& v) {
    if (a.commutative())
        return poly_term(rational(1), mono_sum(u, v));
    int k = last_nonzero(u);
    int i = first_nonzero(v);
    if (k < 0 || i < 0 || k <= i)
        return poly_term(rational(1), mono_sum(u, v));
    {
        std::lock_guard<std::mutex> lock(a.mu_);
        auto it = a.mono_cache_.find({u.e, v.e});
        if (it != a.mono_cache_.end())
            return it->second;
    }
    Monomial u_rest = u;
    u_rest.e[k] = 0;
    Monomial v_rest = v;
    v_rest.e[i] = 0;
    Poly core = a.pair_power(k, u.e[k], i, v.e[i]);
    Poly result = multiply_poly_mono(a, multiply_mono_poly(a, u_rest, core), v_rest);
    std::lock_guard<std::mutex> lock(a.mu_);
    return a.mono_cache_.try_emplace({u.e, v.e}, std::move(result)).first->second;
}

Poly multiply(const Algebra& a, const Poly& f, const Poly& g) {
    std::vector<Term> acc;
    for (const auto& s : f.terms) {
        for (const auto& t : g.terms) {
            Poly part = monomial_product(a, s.mono, t.mono);
            for (auto& u : part.terms)
                acc.push_back({u.coeff * s.coeff * t.coeff, u.mono});
        }
    }
    return poly_normalize(a.order(), std::move(acc));
}

Poly multiply_term(const Algebra& a, const Term& t, const Poly& g) {
    Poly lhs;
    lhs.terms.push_back(t);
    return multiply(a, lhs, g);
}

Poly multiply_poly_term(const Algebra& a, const Poly& f, const Term& t) {
    Poly rhs;
    rhs.terms.push_back(t);
    return multiply(a, f, rhs);
}

Poly poly_var(const Algebra& a, int idx, uint32_t power) {
    return poly_term(rational(1), mono_var(a.nvars(), idx, power));
}

Poly poly_one(const Algebra& a) { return poly_constant(rational(1), a.nvars()); }

AlgebraPtr build_algebra(int nvars, std::vector<std::string> names, std::vector<Rational> c,
                         std::vector<Poly> d, OrderSpec order) {
    if (nvars < 1)
        fail(ErrorCode::bad_argument, "need at least one variable");
    size_t npairs = static_cast<size_t>(nvars) * (nvars - 1) / 2;
    if (names.size() != static_cast<size_t>(nvars) || c.size() != npairs || d.size() != npairs)
        fail(ErrorCode::bad_argument, "relation table size does not match variable count");
    if (!order.var_priority.empty() && order.var_priority.size() != static_cast<size_t>(nvars))
        fail(ErrorCode::bad_argument, "variable priority must be a permutation of all variables");

    auto alg = std::shared_ptr<Algebra>(new Algebra());
    alg->nvars_ = nvars;
    alg->names_ = std::move(names);
    alg->order_ = std::move(order);
    alg->c_ = std::move(c);
    for (auto& p : d)
        alg->d_.push_back(poly_normalize(alg->order_, std::move(p.terms)));

    bool comm = true;
    for (int i = 0; i < nvars; ++i) {
        for (int j = i + 1; j < nvars; ++j) {
            const Rational& cij = alg->c(i, j);
            const Poly& dij = alg->d(i, j);
            if (is_zero(cij))
                fail(ErrorCode::zero_constant,
                     "c(" + alg->names_[i] + "," + alg->names_[j] + ") = 0: extension not bijective");
            if (poly_total_degree(dij) > 1)
                fail(ErrorCode::degree_violation,
                     "d(" + alg->names_[i] + "," + alg->names_[j] + ") has total degree > 1");
            Monomial xij(nvars);
            xij.e[i] = 1;
            xij.e[j] = 1;
            for (const auto& t : dij.terms)
                if (compare(alg->order_, t.mono, xij) >= 0)
                    fail(ErrorCode::order_incompatible,
                         "correction d(" + alg->names_[i] + "," + alg->names_[j] +
                             ") is not smaller than " + alg->names_[i] + "*" + alg->names_[j] +
                             " under the order");
            if (!is_one(cij) || !dij.is_zero())
                comm = false;
        }
    }
    alg->commutative_ = comm;

    // Overlap check: both associations of x_k x_j x_i must normalize equally.
    for (int i = 0; i < nvars; ++i) {
        for (int j = i + 1; j < nvars; ++j) {
            for (int k = j + 1; k < nvars; ++k) {
                Poly xi = poly_var(*alg, i), xj = poly_var(*alg, j), xk = poly_var(*alg, k);
                Poly lhs = multiply(*alg, multiply(*alg, xk, xj), xi);
                Poly rhs = multiply(*alg, xk, multiply(*alg, xj, xi));
                if (!(lhs == rhs))
                    fail(ErrorCode::inconsistent_relations,
                         "associativity fails on " + alg->names_[k] + "*" + alg->names_[j] + "*" +
                             alg->names_[i] + ": the relations do not define a PBW basis");
            }
        }
    }
    return alg;
}

AlgebraPtr build_algebra(std::vector<std::string> names, std::vector<RelationSpec> rels,
                         OrderSpec order) {
    int n = static_cast<int>(names.size());
    size_t npairs = static_cast<size_t>(n) * (n - 1) / 2;
    std::vector<Rational> c(npairs, rational(1));
    std::vector<Poly> d(npairs);
    auto index = [n](int i, int j) { return i * n - i * (i + 1) / 2 + (j - i - 1); };
    for (auto& r : rels) {
        if (r.i < 0 || r.j >= n || r.i >= r.j)
            fail(ErrorCode::bad_argument, "relation indices must satisfy 0 <= i < j < n");
        c[index(r.i, r.j)] = r.c;
        d[index(r.i, r.j)] = r.d;
    }
    return build_algebra(n, std::move(names), std::move(c), std::move(d), std::move(order));
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
    {
        std::lock_guard<std::mutex> lock(a->mu_);
        if (a->op_)
            return a->op_;
    }
    int n = a->nvars();
    std::vector<Rational> c;
    std::vector<Poly> d;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Rational inv = rational(1) / a->c(i, j);
            c.push_back(inv);
            // degree <= 1 elements have the same coordinates in both bases
            d.push_back(poly_scale(a->d(i, j), -inv));
        }
    }
    AlgebraPtr op = build_algebra(n, a->names(), std::move(c), std::move(d), a->order());
    {
        std::lock_guard<std::mutex> lock(op->mu_);
        op->op_ = a;
    }
    std::lock_guard<std::mutex> lock(a->mu_);
    if (!a->op_)
        a->op_ = op;
    return a->op_;
}

Poly to_opposite(const AlgebraPtr& a, const Poly& f) {
    if (a->commutative())
        return f;
    AlgebraPtr op = opposite_algebra(a);
    Poly out;
    for (const auto& t : f.terms) {
        Poly acc = poly_one(*op);
        for (int idx = a->nvars() - 1; idx >= 0; --idx)
            if (t.mono.e[idx])
                acc = multiply(*op, acc, poly_var(*op, idx, t.mono.e[idx]));
        out = poly_add(op->order(), out, poly_scale(acc, t.coeff));
    }
    return out;
}

bool is_central(const Algebra& a, const Poly& f) {
    for (int i = 0; i < a.nvars(); ++i) {
        Poly xi = poly_var(a, i);
        if (!(multiply(a, f, xi) == multiply(a, xi, f)))
            return false;
    }
    return true;
}

} // namespace skewpbw
