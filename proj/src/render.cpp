#include "skewpbw/render.hpp"

namespace skewpbw {

namespace {

std::string render_mono(const Algebra& a, const Monomial& m) {
    std::string s;
    for (int i = 0; i < a.nvars(); ++i) {
        if (!m.e[i])
            continue;
        if (!s.empty())
            s += "*";
        s += a.names()[i];
        if (m.e[i] > 1)
            s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

} // namespace

std::string render_poly(const Algebra& a, const Poly& p) {
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto& t : p.terms) {
        Rational c = t.coeff;
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg)
                s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        Rational abs = neg ? Rational(-c) : c;
        std::string mono = render_mono(a, t.mono);
        if (mono.empty()) {
            s += to_string(abs);
        } else if (is_one(abs)) {
            s += mono;
        } else {
            s += to_string(abs) + "*" + mono;
        }
    }
    return s;
}

std::string render_vector(const Algebra& a, const VectorA& v) {
    std::string s = "(";
    for (int i = 0; i < v.rank(); ++i) {
        if (i)
            s += ", ";
        s += render_poly(a, v.entries[i]);
    }
    return s + ")";
}

std::string render_matrix(const Algebra& a, const MatrixA& m) {
    if (m.ncols() == 0 || m.rows == 0)
        return "[ shape " + std::to_string(m.rows) + "x" + std::to_string(m.ncols()) + " ]";
    std::string s;
    for (int r = 0; r < m.rows; ++r) {
        s += "[";
        for (int c = 0; c < m.ncols(); ++c) {
            if (c)
                s += ", ";
            s += render_poly(a, m.at(r, c));
        }
        s += "]";
        if (r + 1 < m.rows)
            s += "\n";
    }
    return s;
}

nlohmann::json poly_json(const Algebra& a, const Poly& p) {
    (void)a;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms) {
        nlohmann::json term;
        term["n"] = t.coeff.get_num().get_str();
        term["d"] = t.coeff.get_den().get_str();
        term["e"] = t.mono.e;
        terms.push_back(term);
    }
    return terms;
}

nlohmann::json vector_json(const Algebra& a, const VectorA& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : v.entries)
        out.push_back(poly_json(a, p));
    return out;
}

nlohmann::json matrix_json(const Algebra& a, const MatrixA& m) {
    nlohmann::json out;
    out["rows"] = m.rows;
    out["cols"] = m.ncols();
    nlohmann::json cols = nlohmann::json::array();
    for (const auto& c : m.cols)
        cols.push_back(vector_json(a, c));
    out["columns"] = cols;
    return out;
}

nlohmann::json homology_json(const Algebra& a, const HomologyResult& h) {
    nlohmann::json out;
    out["side"] = side_name(h.side);
    out["ambient_rank"] = h.ambient;
    out["zero"] = h.zero;
    out["relations"] = matrix_json(a, h.relations);
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : h.generators)
        gens.push_back(vector_json(a, g));
    out["generators"] = gens;
    return out;
}

std::string render_homology(const Algebra& a, const HomologyResult& h) {
    std::string s;
    s += "side: ";
    s += side_name(h.side);
    s += "\nambient rank: " + std::to_string(h.ambient);
    s += std::string("\nzero: ") + (h.zero ? "true" : "false");
    s += "\nrelations:\n" + render_matrix(a, h.relations);
    s += "\ngenerators (" + std::to_string(h.generators.size()) + "):";
    for (const auto& g : h.generators)
        s += "\n  " + render_vector(a, g);
    return s;
}

} // namespace skewpbw
