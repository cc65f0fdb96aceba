#include "skewpbw/groebner.hpp"

#include "skewpbw/error.hpp"

#include <algorithm>
#include <functional>

namespace skewpbw {

namespace {

struct Item {
    VectorA v;
    ModuleMonomial lm;
    VectorA prov; // coordinates over the original generators (tracked runs)
};

struct SPair {
    int a, b;
    ModuleMonomial gamma;
};

// Scale to coprime integer entries with positive leading coefficient; the
// provenance is scaled by the same factor. Keeps the coefficients that drive
// quotient factors flat across the saturation loop.
void make_primitive(Item& item) {
    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& entry : item.v.entries) {
        for (const auto& t : entry.terms) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
        }
    }
    if (num_gcd == 0)
        return;
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(item.v.entries[item.lm.pos].leading().coeff) < 0)
        factor = -factor;
    if (is_one(factor))
        return;
    item.v = vec_scale(item.v, factor);
    item.prov = vec_scale(item.prov, factor);
}

// Buchberger saturation: normal pair-selection strategy, no deletion
// criteria, full reduction of every S-vector. Provenance coordinates are
// carried per basis element and updated only when an element is added, so the
// inner division loop works on plain vectors.
class Engine {
  public:
    Engine(AlgebraPtr alg, int rank, int nsources, bool track)
        : alg_(std::move(alg)), rank_(rank), nsources_(nsources), track_(track) {}

    void add(VectorA v, VectorA prov) {
        if (v.is_zero())
            return;
        auto [lc, lm] = leading_term(*alg_, v);
        (void)lc;
        int idx = static_cast<int>(items_.size());
        Item item{std::move(v), lm, std::move(prov)};
        make_primitive(item);
        items_.push_back(std::move(item));
        for (int k = 0; k < idx; ++k) {
            if (items_[k].lm.pos != lm.pos)
                continue;
            pairs_.push_back(
                {k, idx, ModuleMonomial{mono_lcm(items_[k].lm.mono, lm.mono), lm.pos}});
        }
    }

    void add_generator(int index, const VectorA& v) {
        process(v, [&] {
            VectorA seed(nsources_);
            seed.entries[index] = poly_constant(rational(1), alg_->nvars());
            return seed;
        });
    }

    void run() {
        while (!pairs_.empty()) {
            // normal strategy: smallest lcm monomial, ties by smallest index
            size_t best = 0;
            for (size_t k = 1; k < pairs_.size(); ++k) {
                int c = compare(alg_->order(), pairs_[k].gamma, pairs_[best].gamma, rank_);
                if (c < 0 || (c == 0 && std::pair(pairs_[k].a, pairs_[k].b) <
                                            std::pair(pairs_[best].a, pairs_[best].b)))
                    best = k;
            }
            SPair p = pairs_[best];
            pairs_.erase(pairs_.begin() + best);
            process(s_vector_plain(p), [&] { return s_vector_prov(p); });
        }
    }

    // monic, redundancy-free, tail-reduced, sorted by leading monomial
    // descending; provenance follows every step
    void interreduce() {
        for (size_t i = 0; i < items_.size();) {
            bool redundant = false;
            for (size_t j = 0; j < items_.size(); ++j) {
                if (i == j || items_[j].lm.pos != items_[i].lm.pos)
                    continue;
                if (mono_divides(items_[j].lm.mono, items_[i].lm.mono)) {
                    redundant = true;
                    break;
                }
            }
            if (redundant)
                items_.erase(items_.begin() + i);
            else
                ++i;
        }
        for (size_t i = 0; i < items_.size(); ++i) {
            std::vector<VectorA> others;
            std::vector<size_t> omap;
            for (size_t j = 0; j < items_.size(); ++j) {
                if (j == i)
                    continue;
                others.push_back(items_[j].v);
                omap.push_back(j);
            }
            DivisionResult div = divide(alg_, Side::left, items_[i].v, others);
            VectorA prov = items_[i].prov;
            if (track_)
                for (size_t k = 0; k < others.size(); ++k)
                    if (!div.quotients[k].is_zero())
                        prov = vec_sub(*alg_, prov,
                                       vec_mul_poly(*alg_, Side::left, div.quotients[k],
                                                    items_[omap[k]].prov));
            auto [lc, lm] = leading_term(*alg_, div.remainder);
            items_[i] = {vec_scale(div.remainder, rational(1) / lc), lm,
                         vec_scale(prov, rational(1) / lc)};
        }
        std::sort(items_.begin(), items_.end(), [&](const Item& a, const Item& b) {
            return compare(alg_->order(), a.lm, b.lm, rank_) > 0;
        });
    }

    const std::vector<Item>& items() const { return items_; }

  private:
    // divide first; the provenance seed and its update run only when the
    // remainder survives, so zero reductions cost no provenance arithmetic
    template <typename SeedFn>
    void process(const VectorA& v, SeedFn make_seed) {
        std::vector<VectorA> divisors;
        divisors.reserve(items_.size());
        for (const auto& it : items_)
            divisors.push_back(it.v);
        DivisionResult div = divide(alg_, Side::left, v, divisors);
        if (div.remainder.is_zero())
            return;
        VectorA prov(nsources_);
        if (track_) {
            prov = make_seed();
            for (size_t k = 0; k < items_.size(); ++k)
                if (!div.quotients[k].is_zero())
                    prov = vec_sub(*alg_, prov,
                                   vec_mul_poly(*alg_, Side::left, div.quotients[k],
                                                items_[k].prov));
        }
        add(std::move(div.remainder), std::move(prov));
    }

    // (1/a) x^{gamma-lm(g)} g - (1/b) x^{gamma-lm(h)} h with a, b the leading
    // coefficients of those products
    VectorA s_vector_plain(const SPair& p) const {
        const Item& ga = items_[p.a];
        const Item& gb = items_[p.b];
        VectorA pa = vec_mul_term(*alg_, Side::left,
                                  {rational(1), mono_diff(p.gamma.mono, ga.lm.mono)}, ga.v);
        VectorA pb = vec_mul_term(*alg_, Side::left,
                                  {rational(1), mono_diff(p.gamma.mono, gb.lm.mono)}, gb.v);
        Rational ia = rational(1) / leading_term(*alg_, pa).first;
        Rational ib = rational(1) / leading_term(*alg_, pb).first;
        return vec_sub(*alg_, vec_scale(pa, ia), vec_scale(pb, ib));
    }

    VectorA s_vector_prov(const SPair& p) const {
        const Item& ga = items_[p.a];
        const Item& gb = items_[p.b];
        Term ta{rational(1), mono_diff(p.gamma.mono, ga.lm.mono)};
        Term tb{rational(1), mono_diff(p.gamma.mono, gb.lm.mono)};
        VectorA pa = vec_mul_term(*alg_, Side::left, ta, ga.v);
        VectorA pb = vec_mul_term(*alg_, Side::left, tb, gb.v);
        Rational ia = rational(1) / leading_term(*alg_, pa).first;
        Rational ib = rational(1) / leading_term(*alg_, pb).first;
        return vec_sub(*alg_, vec_mul_term(*alg_, Side::left, {ia, ta.mono}, ga.prov),
                       vec_mul_term(*alg_, Side::left, {ib, tb.mono}, gb.prov));
    }

    AlgebraPtr alg_;
    int rank_;
    int nsources_;
    bool track_;
    std::vector<Item> items_;
    std::vector<SPair> pairs_;
};

Engine saturated_engine(const AlgebraPtr& alg, const std::vector<VectorA>& gens, int rank,
                        bool track) {
    Engine engine(alg, rank, static_cast<int>(gens.size()), track);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero())
            continue;
        if (gens[i].rank() != rank)
            fail(ErrorCode::rank_mismatch, "generator rank does not match ambient rank");
        engine.add_generator(static_cast<int>(i), gens[i]);
    }
    engine.run();
    engine.interreduce();
    return engine;
}

GroebnerBasis buchberger_left(const AlgebraPtr& alg, const std::vector<VectorA>& gens, int rank) {
    Engine engine = saturated_engine(alg, gens, rank, true);
    GroebnerBasis g;
    g.algebra = alg;
    g.side = Side::left;
    g.rank = rank;
    g.provenance = MatrixA(static_cast<int>(gens.size()));
    for (const auto& it : engine.items()) {
        g.elements.push_back(it.v);
        g.provenance.cols.push_back(it.prov);
    }
    return g;
}

std::vector<VectorA> plain_groebner(const AlgebraPtr& alg, const std::vector<VectorA>& gens,
                                    int rank) {
    Engine engine = saturated_engine(alg, gens, rank, false);
    std::vector<VectorA> out;
    for (const auto& it : engine.items())
        out.push_back(it.v);
    return out;
}

} // namespace

// Generators of Syz(columns) via Schreyer's theorem on the reduced basis plus
// the residues of the original generators: for every same-position pair the
// S-vector division S = sum q_k g_k yields the basis syzygy
// z = (1/a) x^{u_a} eps_a - (1/b) x^{u_b} eps_b - sum q_k eps_k, mapped back
// through the provenance H; each original column contributes e_i - H Q[:,i].
std::vector<VectorA> groebner_syzygies_left(const AlgebraPtr& a, const std::vector<VectorA>& gens,
                                            int rank) {
    int s = static_cast<int>(gens.size());
    GroebnerBasis g = buchberger_left(a, gens, rank);
    int p = static_cast<int>(g.elements.size());

    std::vector<std::pair<Rational, ModuleMonomial>> lead;
    lead.reserve(p);
    for (const auto& e : g.elements)
        lead.push_back(leading_term(*a, e));

    std::vector<VectorA> out;

    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            if (lead[i].second.pos != lead[j].second.pos)
                continue;
            Monomial gamma = mono_lcm(lead[i].second.mono, lead[j].second.mono);
            Term ti{rational(1), mono_diff(gamma, lead[i].second.mono)};
            Term tj{rational(1), mono_diff(gamma, lead[j].second.mono)};
            VectorA pi = vec_mul_term(*a, Side::left, ti, g.elements[i]);
            VectorA pj = vec_mul_term(*a, Side::left, tj, g.elements[j]);
            Rational ii = rational(1) / leading_term(*a, pi).first;
            Rational ij = rational(1) / leading_term(*a, pj).first;
            VectorA s_vec = vec_sub(*a, vec_scale(pi, ii), vec_scale(pj, ij));
            DivisionResult div = divide(a, Side::left, s_vec, g.elements);
            if (!div.remainder.is_zero())
                fail(ErrorCode::inconsistent_relations,
                     "S-vector of a Groebner basis did not reduce to zero");
            VectorA w(s);
            auto accumulate = [&](const Poly& coeff, int basis_index) {
                if (coeff.is_zero())
                    return;
                w = vec_add(*a, w,
                            vec_mul_poly(*a, Side::left, coeff,
                                         g.provenance.cols[basis_index]));
            };
            accumulate(poly_term(ii, ti.mono), i);
            accumulate(poly_neg(poly_term(ij, tj.mono)), j);
            for (int k = 0; k < p; ++k)
                accumulate(poly_neg(div.quotients[k]), k);
            if (!w.is_zero())
                out.push_back(std::move(w));
        }
    }

    for (int i = 0; i < s; ++i) {
        if (gens[i].is_zero()) {
            VectorA w(s);
            w.entries[i] = poly_constant(rational(1), a->nvars());
            out.push_back(std::move(w));
            continue;
        }
        DivisionResult div = divide(a, Side::left, gens[i], g.elements);
        if (!div.remainder.is_zero())
            fail(ErrorCode::inconsistent_relations,
                 "generator did not reduce to zero against its own Groebner basis");
        VectorA w(s);
        w.entries[i] = poly_constant(rational(1), a->nvars());
        for (int k = 0; k < p; ++k)
            if (!div.quotients[k].is_zero())
                w = vec_sub(*a, w,
                            vec_mul_poly(*a, Side::left, div.quotients[k],
                                         g.provenance.cols[k]));
        if (!w.is_zero())
            out.push_back(std::move(w));
    }
    return out;
}

GroebnerBasis buchberger(const AlgebraPtr& a, Side side, const std::vector<VectorA>& gens,
                         int rank) {
    if (side == Side::left)
        return buchberger_left(a, gens, rank);
    AlgebraPtr op = opposite_algebra(a);
    std::vector<VectorA> ogens;
    ogens.reserve(gens.size());
    for (const auto& g : gens)
        ogens.push_back(vec_to_opposite(a, g));
    GroebnerBasis og = buchberger_left(op, ogens, rank);
    GroebnerBasis out;
    out.algebra = a;
    out.side = Side::right;
    out.rank = rank;
    out.provenance = MatrixA(static_cast<int>(gens.size()));
    for (auto& e : og.elements)
        out.elements.push_back(vec_to_opposite(op, e));
    for (auto& c : og.provenance.cols)
        out.provenance.cols.push_back(vec_to_opposite(op, c));
    return out;
}

std::vector<VectorA> reduce_basis(const AlgebraPtr& a, Side side, std::vector<VectorA> basis,
                                  int rank) {
    if (side == Side::right) {
        AlgebraPtr op = opposite_algebra(a);
        std::vector<VectorA> ob;
        for (auto& v : basis)
            ob.push_back(vec_to_opposite(a, v));
        std::vector<VectorA> red = reduce_basis(op, Side::left, std::move(ob), rank);
        std::vector<VectorA> out;
        for (auto& v : red)
            out.push_back(vec_to_opposite(op, v));
        return out;
    }
    struct Entry {
        VectorA v;
        ModuleMonomial lm;
    };
    std::vector<Entry> items;
    for (auto& v : basis) {
        if (v.is_zero())
            continue;
        auto [lc, lm] = leading_term(*a, v);
        VectorA monic = vec_scale(v, rational(1) / lc);
        bool dup = false;
        for (auto& u : items)
            if (u.lm == lm && u.v == monic)
                dup = true;
        if (!dup)
            items.push_back({std::move(monic), lm});
    }
    for (size_t i = 0; i < items.size();) {
        bool redundant = false;
        for (size_t j = 0; j < items.size(); ++j) {
            if (i == j || items[j].lm.pos != items[i].lm.pos)
                continue;
            if (mono_divides(items[j].lm.mono, items[i].lm.mono)) {
                redundant = true;
                break;
            }
        }
        if (redundant)
            items.erase(items.begin() + i);
        else
            ++i;
    }
    for (size_t i = 0; i < items.size(); ++i) {
        std::vector<VectorA> others;
        for (size_t j = 0; j < items.size(); ++j)
            if (j != i)
                others.push_back(items[j].v);
        VectorA r = divide(a, Side::left, items[i].v, others).remainder;
        auto [lc, lm] = leading_term(*a, r);
        items[i] = {vec_scale(r, rational(1) / lc), lm};
    }
    std::sort(items.begin(), items.end(), [&](const Entry& x, const Entry& y) {
        return compare(a->order(), x.lm, y.lm, rank) > 0;
    });
    std::vector<VectorA> out;
    for (auto& it : items)
        out.push_back(std::move(it.v));
    return out;
}

bool member(const GroebnerBasis& g, const VectorA& f) {
    if (f.rank() != g.rank)
        fail(ErrorCode::rank_mismatch, "vector rank does not match basis ambient rank");
    if (f.is_zero())
        return true;
    return divide(g.algebra, g.side, f, g.elements).remainder.is_zero();
}

namespace {

// membership of every probe column against a throwaway provenance-free basis
bool spans(const AlgebraPtr& a, Side side, const MatrixA& gens, const MatrixA& probes) {
    if (side == Side::left) {
        std::vector<VectorA> basis = plain_groebner(a, gens.cols, gens.rows);
        for (const auto& c : probes.cols)
            if (!c.is_zero() && !divide(a, Side::left, c, basis).remainder.is_zero())
                return false;
        return true;
    }
    AlgebraPtr op = opposite_algebra(a);
    MatrixA ogens = mat_to_opposite(a, gens);
    std::vector<VectorA> basis = plain_groebner(op, ogens.cols, ogens.rows);
    for (const auto& c : probes.cols) {
        if (c.is_zero())
            continue;
        if (!divide(op, Side::left, vec_to_opposite(a, c), basis).remainder.is_zero())
            return false;
    }
    return true;
}

} // namespace

bool module_equal(const AlgebraPtr& a, Side side, const MatrixA& f1, const MatrixA& f2) {
    if (f1.rows != f2.rows)
        fail(ErrorCode::rank_mismatch, "modules live in different ambient ranks");
    return spans(a, side, f2, f1) && spans(a, side, f1, f2);
}

std::optional<uint64_t> qdimension(const GroebnerBasis& g) {
    int n = g.algebra->nvars();
    uint64_t total = 0;
    for (int pos = 0; pos < g.rank; ++pos) {
        std::vector<Monomial> lms;
        for (const auto& e : g.elements) {
            auto [c, mm] = leading_term(*g.algebra, e);
            (void)c;
            if (mm.pos == pos)
                lms.push_back(mm.mono);
        }
        if (lms.empty())
            return std::nullopt;
        // finite at this position iff every variable has a pure-power leading
        // monomial; the minimal such powers bound the staircase box
        std::vector<uint32_t> bound(n, 0);
        for (int i = 0; i < n; ++i) {
            bool found = false;
            for (const auto& m : lms) {
                bool pure = true;
                for (int k = 0; k < n; ++k)
                    if (k != i && m.e[k]) {
                        pure = false;
                        break;
                    }
                if (pure) {
                    bound[i] = found ? std::min(bound[i], m.e[i]) : m.e[i];
                    found = true;
                }
            }
            if (!found)
                return std::nullopt;
        }
        Monomial probe(n);
        uint64_t count = 0;
        std::function<void(int)> walk = [&](int idx) {
            if (idx == n) {
                for (const auto& m : lms)
                    if (mono_divides(m, probe))
                        return;
                ++count;
                return;
            }
            for (uint32_t v = 0; v < bound[idx]; ++v) {
                probe.e[idx] = v;
                walk(idx + 1);
            }
            probe.e[idx] = 0;
        };
        bool empty_box = false;
        for (int i = 0; i < n; ++i)
            if (bound[i] == 0)
                empty_box = true;
        if (!empty_box)
            walk(0);
        total += count;
    }
    return total;
}

std::optional<uint64_t> qdimension(const AlgebraPtr& a, Side side, const MatrixA& relations,
                                   int rank) {
    GroebnerBasis g = buchberger(a, side, relations.cols, rank);
    return qdimension(g);
}

} // namespace skewpbw
