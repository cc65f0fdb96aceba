#include "commutative.hpp"

#include <algorithm>
#include <cstdlib>

namespace oracle {

namespace {

unsigned total(const std::vector<unsigned>& e) {
    unsigned t = 0;
    for (auto v : e)
        t += v;
    return t;
}

int mono_cmp(skewpbw::BaseOrder base, const std::vector<unsigned>& a,
             const std::vector<unsigned>& b) {
    if (base != skewpbw::BaseOrder::lex) {
        unsigned ta = total(a), tb = total(b);
        if (ta != tb)
            return ta < tb ? -1 : 1;
    }
    if (base == skewpbw::BaseOrder::degrevlex) {
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        return 0;
    }
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return a[i] < b[i] ? -1 : 1;
    return 0;
}

bool divides(const std::vector<unsigned>& d, const std::vector<unsigned>& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i])
            return false;
    return true;
}

std::vector<unsigned> diff(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] -= b[i];
    return r;
}

std::vector<unsigned> lcm(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    std::vector<unsigned> r = a;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = std::max(r[i], b[i]);
    return r;
}

Key lead_key(const Element& f) { return f.rbegin()->first; }
Rational lead_coeff(const Element& f) { return f.rbegin()->second; }

} // namespace

bool KeyOrder::less(const Key& a, const Key& b) const {
    if (block_split > 0) {
        bool a_hi = a.pos < block_split, b_hi = b.pos < block_split;
        if (a_hi != b_hi)
            return b_hi; // anything in the leading block beats the tail block
    }
    if (top) {
        if (int c = mono_cmp(base, a.e, b.e))
            return c < 0;
        return a.pos < b.pos; // e_m > ... > e_1
    }
    if (a.pos != b.pos)
        return a.pos < b.pos;
    return mono_cmp(base, a.e, b.e) < 0;
}

Element make_element(const KeyOrder& ord) { return Element(ord); }

void add_term(Element& f, const Key& k, const Rational& c) {
    auto [it, fresh] = f.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0)
            f.erase(it);
    }
}

Element add(const Element& f, const Element& g) {
    Element out = f;
    for (const auto& [k, c] : g)
        add_term(out, k, c);
    return out;
}

Element scale(const Element& f, const Rational& c) {
    Element out(f.key_comp());
    if (sgn(c) == 0)
        return out;
    for (const auto& [k, v] : f)
        out.emplace(k, v * c);
    return out;
}

Element mul_term(const Element& f, const std::vector<unsigned>& mono, const Rational& c) {
    Element out(f.key_comp());
    if (sgn(c) == 0)
        return out;
    for (const auto& [k, v] : f) {
        Key nk = k;
        for (size_t i = 0; i < mono.size(); ++i)
            nk.e[i] += mono[i];
        out.emplace(nk, v * c);
    }
    return out;
}

bool is_zero(const Element& f) { return f.empty(); }

DivisionOut divide(const Element& f, const std::vector<Element>& basis, const KeyOrder& ord) {
    DivisionOut out;
    out.remainder = make_element(ord);
    out.quotients.assign(basis.size(), make_element(ord));
    Element work = f;
    while (!work.empty()) {
        Key lk = lead_key(work);
        Rational lc = lead_coeff(work);
        bool hit = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty())
                continue;
            Key bk = lead_key(basis[i]);
            if (bk.pos == lk.pos && divides(bk.e, lk.e)) {
                Rational factor = lc / lead_coeff(basis[i]);
                std::vector<unsigned> shift = diff(lk.e, bk.e);
                work = add(work, mul_term(basis[i], shift, -factor));
                Key qk{0, shift};
                add_term(out.quotients[i], qk, factor);
                hit = true;
                break;
            }
        }
        if (!hit) {
            add_term(out.remainder, lk, lc);
            add_term(work, lk, -lc);
        }
    }
    return out;
}

std::vector<Element> buchberger(std::vector<Element> gens, const KeyOrder& ord) {
    std::vector<Element> basis;
    for (auto& g : gens)
        if (!g.empty())
            basis.push_back(g);
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j)
            pairs.push_back({i, j});
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Key ki = lead_key(basis[i]), kj = lead_key(basis[j]);
        if (ki.pos != kj.pos)
            continue;
        std::vector<unsigned> l = lcm(ki.e, kj.e);
        Element s = add(mul_term(basis[i], diff(l, ki.e), Rational(1) / lead_coeff(basis[i])),
                        mul_term(basis[j], diff(l, kj.e), -Rational(1) / lead_coeff(basis[j])));
        Element r = divide(s, basis, ord).remainder;
        if (!r.empty()) {
            basis.push_back(r);
            for (size_t k = 0; k + 1 < basis.size(); ++k)
                pairs.push_back({k, basis.size() - 1});
        }
    }
    return reduce(std::move(basis), ord);
}

std::vector<Element> reduce(std::vector<Element> basis, const KeyOrder& ord) {
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const Element& e) { return e.empty(); }),
                basis.end());
    for (size_t i = 0; i < basis.size();) {
        bool drop = false;
        Key ki = lead_key(basis[i]);
        for (size_t j = 0; j < basis.size(); ++j) {
            if (i == j)
                continue;
            Key kj = lead_key(basis[j]);
            if (kj.pos == ki.pos && divides(kj.e, ki.e)) {
                drop = true;
                break;
            }
        }
        if (drop)
            basis.erase(basis.begin() + i);
        else
            ++i;
    }
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<Element> others;
        for (size_t j = 0; j < basis.size(); ++j)
            if (j != i)
                others.push_back(basis[j]);
        basis[i] = divide(basis[i], others, ord).remainder;
        basis[i] = scale(basis[i], Rational(1) / lead_coeff(basis[i]));
    }
    std::sort(basis.begin(), basis.end(), [&](const Element& a, const Element& b) {
        return ord.less(lead_key(b), lead_key(a));
    });
    return basis;
}

bool member(const Element& f, const std::vector<Element>& reduced_basis, const KeyOrder& ord) {
    return divide(f, reduced_basis, ord).remainder.empty();
}

std::vector<Element> syzygies(const std::vector<Element>& gens, int rank, int nvars,
                              const KeyOrder& ord) {
    int s = static_cast<int>(gens.size());
    KeyOrder elim = ord;
    elim.top = false;
    elim.block_split = rank;
    // embed (f_i | e_i) in A^{rank+s}
    std::vector<Element> embedded;
    for (int i = 0; i < s; ++i) {
        Element v = make_element(elim);
        for (const auto& [k, c] : gens[i])
            v.emplace(k, c);
        add_term(v, Key{rank + i, std::vector<unsigned>(nvars, 0)}, Rational(1));
        embedded.push_back(v);
    }
    std::vector<Element> gb = buchberger(embedded, elim);
    std::vector<Element> out;
    for (const auto& g : gb) {
        bool pure_tail = true;
        for (const auto& [k, c] : g)
            if (k.pos < rank) {
                pure_tail = false;
                break;
            }
        if (!pure_tail)
            continue;
        Element z = make_element(ord);
        for (const auto& [k, c] : g)
            z.emplace(Key{k.pos - rank, k.e}, c);
        out.push_back(z);
    }
    return out;
}

long long qdimension(const std::vector<Element>& reduced_basis, int rank, int nvars) {
    long long totalcount = 0;
    for (int pos = 0; pos < rank; ++pos) {
        std::vector<std::vector<unsigned>> lms;
        for (const auto& g : reduced_basis)
            if (lead_key(g).pos == pos)
                lms.push_back(lead_key(g).e);
        if (lms.empty())
            return -1;
        std::vector<unsigned> bound(nvars, 0);
        for (int v = 0; v < nvars; ++v) {
            bool found = false;
            for (const auto& m : lms) {
                bool pure = true;
                for (int w = 0; w < nvars; ++w)
                    if (w != v && m[w]) {
                        pure = false;
                        break;
                    }
                if (pure) {
                    bound[v] = found ? std::min(bound[v], m[v]) : m[v];
                    found = true;
                }
            }
            if (!found)
                return -1;
        }
        std::vector<unsigned> probe(nvars, 0);
        bool done = false;
        while (!done) {
            bool standard = true;
            for (const auto& m : lms)
                if (divides(m, probe)) {
                    standard = false;
                    break;
                }
            if (standard)
                ++totalcount;
            int idx = 0;
            while (idx < nvars) {
                if (bound[idx] == 0) {
                    done = true;
                    break;
                }
                if (++probe[idx] < bound[idx])
                    break;
                probe[idx] = 0;
                ++idx;
            }
            if (idx == nvars)
                done = true;
        }
    }
    return totalcount;
}

} // namespace oracle
