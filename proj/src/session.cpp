#include "skewpbw/session.hpp"

#include "skewpbw/error.hpp"

#include <cctype>

namespace skewpbw {

namespace {

enum class Tok { ident, number, punct, end };

struct Token {
    Tok kind = Tok::end;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorCode::syntax_error, msg + " at line " + std::to_string(tok_.line) + ", column " +
                                          std::to_string(tok_.col));
    }

  private:
    void advance() {
        skip_space();
        tok_ = {Tok::end, "", line_, col_};
        if (pos_ >= text_.size())
            return;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                step();
            tok_.kind = Tok::ident;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                step();
            // lexical rational p/q (no spaces)
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                step();
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    step();
            }
            tok_.kind = Tok::number;
            tok_.text = text_.substr(start, pos_ - start);
            return;
        }
        tok_.kind = Tok::punct;
        tok_.text = std::string(1, c);
        step();
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#' || (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/')) {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
        tok_.line = line_;
        tok_.col = col_;
    }

    void step() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

bool is_punct(const Token& t, const char* p) { return t.kind == Tok::punct && t.text == p; }
bool is_ident(const Token& t, const char* p) { return t.kind == Tok::ident && t.text == p; }

class PolyParser {
  public:
    PolyParser(Lexer& lex, const AlgebraPtr& alg) : lex_(lex), alg_(alg) {}

    // expr := term (('+'|'-') term)*
    Poly expr() {
        Poly acc = term();
        while (is_punct(lex_.peek(), "+") || is_punct(lex_.peek(), "-")) {
            bool plus = lex_.take().text == "+";
            Poly rhs = term();
            acc = plus ? add(*alg_, acc, rhs) : sub(*alg_, acc, rhs);
        }
        return acc;
    }

  private:
    Poly term() {
        Poly acc = factor();
        while (is_punct(lex_.peek(), "*")) {
            lex_.take();
            acc = multiply(*alg_, acc, factor());
        }
        return acc;
    }

    Poly factor() {
        if (is_punct(lex_.peek(), "-")) {
            lex_.take();
            return poly_neg(factor());
        }
        Poly base = primary();
        while (is_punct(lex_.peek(), "^")) {
            lex_.take();
            Token t = lex_.peek();
            if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
                lex_.error("expected a natural-number exponent");
            lex_.take();
            unsigned long n = std::stoul(t.text);
            Poly p = poly_one(*alg_);
            for (unsigned long k = 0; k < n; ++k)
                p = multiply(*alg_, p, base);
            base = p;
        }
        return base;
    }

    Poly primary() {
        Token t = lex_.peek();
        if (t.kind == Tok::number) {
            lex_.take();
            return poly_constant(rational_from_string(t.text), alg_->nvars());
        }
        if (t.kind == Tok::ident) {
            lex_.take();
            for (int i = 0; i < alg_->nvars(); ++i)
                if (alg_->names()[i] == t.text)
                    return poly_var(*alg_, i);
            fail(ErrorCode::unknown_variable, "'" + t.text + "' at line " + std::to_string(t.line) +
                                                  ", column " + std::to_string(t.col));
        }
        if (is_punct(t, "(")) {
            lex_.take();
            Poly p = expr();
            if (!is_punct(lex_.peek(), ")"))
                lex_.error("expected ')'");
            lex_.take();
            return p;
        }
        lex_.error("expected a polynomial");
    }

    Lexer& lex_;
    const AlgebraPtr& alg_;
};

struct PendingRelation {
    int i, j;
    Poly rhs; // parsed over the commutative scaffold
    int line, col;
};

class SessionParser {
  public:
    explicit SessionParser(const std::string& text) : lex_(text) {}

    Session run() {
        while (lex_.peek().kind != Tok::end)
            statement();
        finalize_algebra();
        return std::move(session_);
    }

  private:
    void statement() {
        Token t = lex_.peek();
        if (t.kind != Tok::ident)
            lex_.error("expected a statement");
        if (t.text == "vars")
            stmt_vars();
        else if (t.text == "rel")
            stmt_rel();
        else if (t.text == "order")
            stmt_order();
        else if (t.text == "morder")
            stmt_morder();
        else if (t.text == "module")
            stmt_module();
        else if (t.text == "matrix")
            stmt_matrix();
        else if (t.text == "presentation")
            stmt_presentation();
        else
            lex_.error("unknown statement '" + t.text + "'");
    }

    void require_punct(const char* p) {
        if (!is_punct(lex_.peek(), p))
            lex_.error(std::string("expected '") + p + "'");
        lex_.take();
    }

    Token require_ident() {
        if (lex_.peek().kind != Tok::ident)
            lex_.error("expected an identifier");
        return lex_.take();
    }

    int require_nat() {
        Token t = lex_.peek();
        if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
            lex_.error("expected a natural number");
        lex_.take();
        return std::stoi(t.text);
    }

    void require_algebra_open(const char* what) {
        if (session_.algebra)
            fail(ErrorCode::syntax_error,
                 std::string(what) + " must appear before any module or matrix");
    }

    void stmt_vars() {
        lex_.take();
        require_algebra_open("vars");
        if (!names_.empty())
            lex_.error("variables already declared");
        names_.push_back(require_ident().text);
        while (is_punct(lex_.peek(), ",")) {
            lex_.take();
            names_.push_back(require_ident().text);
        }
        require_punct(";");
        scaffold_ = build_algebra(std::vector<std::string>(names_), {}, OrderSpec{});
    }

    int var_index(const Token& t) {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == t.text)
                return static_cast<int>(i);
        fail(ErrorCode::unknown_variable, "'" + t.text + "' at line " + std::to_string(t.line) +
                                              ", column " + std::to_string(t.col));
    }

    void stmt_rel() {
        Token kw = lex_.take();
        require_algebra_open("rel");
        if (names_.empty())
            lex_.error("declare vars before relations");
        Token lhs1 = require_ident();
        require_punct("*");
        Token lhs2 = require_ident();
        int j = var_index(lhs1), i = var_index(lhs2);
        if (j <= i)
            lex_.error("relation left-hand side must be x_j*x_i with j after i in declaration order");
        require_punct("=");
        PolyParser pp(lex_, scaffold_);
        Poly rhs = pp.expr();
        require_punct(";");
        rels_.push_back({i, j, rhs, kw.line, kw.col});
    }

    void stmt_order() {
        lex_.take();
        require_algebra_open("order");
        Token kind = require_ident();
        if (kind.text == "deglex")
            order_.base = BaseOrder::deglex;
        else if (kind.text == "lex")
            order_.base = BaseOrder::lex;
        else if (kind.text == "degrevlex")
            order_.base = BaseOrder::degrevlex;
        else
            lex_.error("unknown order '" + kind.text + "'");
        order_.var_priority.clear();
        if (is_punct(lex_.peek(), "(")) {
            lex_.take();
            order_.var_priority.push_back(var_index(require_ident()));
            while (is_punct(lex_.peek(), ">")) {
                lex_.take();
                order_.var_priority.push_back(var_index(require_ident()));
            }
            require_punct(")");
            if (order_.var_priority.size() != names_.size())
                lex_.error("order must rank every variable");
        }
        require_punct(";");
    }

    int position_index(const Token& t) {
        if (t.text.size() < 2 || t.text[0] != 'e')
            lex_.error("expected a position like e1");
        for (size_t k = 1; k < t.text.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(t.text[k])))
                lex_.error("expected a position like e1");
        return std::stoi(t.text.substr(1)) - 1;
    }

    void stmt_morder() {
        lex_.take();
        require_algebra_open("morder");
        Token kind = require_ident();
        if (kind.text == "TOP")
            order_.strategy = ModuleStrategy::top;
        else if (kind.text == "POT")
            order_.strategy = ModuleStrategy::pot;
        else
            lex_.error("module order must be TOP or POT");
        order_.position_priority.clear();
        if (is_punct(lex_.peek(), "(")) {
            lex_.take();
            order_.position_priority.push_back(position_index(require_ident()));
            while (is_punct(lex_.peek(), ">")) {
                lex_.take();
                order_.position_priority.push_back(position_index(require_ident()));
            }
            require_punct(")");
        }
        require_punct(";");
    }

    void finalize_algebra() {
        if (session_.algebra)
            return;
        if (names_.empty())
            fail(ErrorCode::syntax_error, "session declares no variables");
        int n = static_cast<int>(names_.size());
        std::vector<RelationSpec> specs;
        for (auto& r : rels_) {
            Monomial xij(n);
            xij.e[r.i] = 1;
            xij.e[r.j] = 1;
            Rational c = rational(0);
            Poly d;
            for (const auto& t : r.rhs.terms) {
                if (t.mono == xij) {
                    c = t.coeff;
                } else if (t.mono.total_degree() >= 2) {
                    fail(ErrorCode::syntax_error,
                         "relation right-hand side must be c*" + names_[r.i] + "*" + names_[r.j] +
                             " plus terms of degree <= 1 (line " + std::to_string(r.line) + ")");
                } else {
                    d.terms.push_back(t);
                }
            }
            specs.push_back({r.i, r.j, c, poly_normalize(order_, std::move(d.terms))});
        }
        session_.algebra = build_algebra(std::vector<std::string>(names_), std::move(specs), order_);
    }

    VectorA parse_tuple(int rank) {
        require_punct("(");
        VectorA v(rank);
        for (int k = 0; k < rank; ++k) {
            if (k > 0)
                require_punct(",");
            PolyParser pp(lex_, session_.algebra);
            v.entries[k] = pp.expr();
        }
        require_punct(")");
        return v;
    }

    void check_fresh(const std::string& name) {
        if (session_.modules.count(name) || session_.matrices.count(name) ||
            session_.presentations.count(name))
            fail(ErrorCode::syntax_error, "name '" + name + "' is already defined");
    }

    void stmt_module() {
        lex_.take();
        finalize_algebra();
        std::string name = require_ident().text;
        check_fresh(name);
        if (!is_ident(lex_.peek(), "in"))
            lex_.error("expected 'in A^m'");
        lex_.take();
        if (!is_ident(lex_.peek(), "A"))
            lex_.error("expected 'A^m'");
        lex_.take();
        require_punct("^");
        int rank = require_nat();
        MatrixA gens(rank);
        if (is_punct(lex_.peek(), "=")) {
            lex_.take();
            gens.cols.push_back(parse_tuple(rank));
            while (is_punct(lex_.peek(), ",")) {
                lex_.take();
                gens.cols.push_back(parse_tuple(rank));
            }
        }
        require_punct(";");
        session_.modules.emplace(name, std::move(gens));
    }

    void stmt_matrix() {
        lex_.take();
        finalize_algebra();
        std::string name = require_ident().text;
        check_fresh(name);
        if (!is_ident(lex_.peek(), "in"))
            lex_.error("expected 'in A^mxk'");
        lex_.take();
        if (!is_ident(lex_.peek(), "A"))
            lex_.error("expected 'A^mxk'");
        lex_.take();
        require_punct("^");
        // shape like 6x3 lexes as number then ident "x3" or ident... accept
        // number 'x' number via ident splitting
        int rows = require_nat();
        Token xtok = require_ident();
        int cols;
        if (xtok.text == "x") {
            cols = require_nat();
        } else if (xtok.text.size() > 1 && xtok.text[0] == 'x') {
            cols = std::stoi(xtok.text.substr(1));
        } else {
            lex_.error("expected a shape like A^6x3");
        }
        MatrixA m = mat_zero(rows, cols);
        require_punct("=");
        for (int r = 0; r < rows; ++r) {
            require_punct("[");
            for (int c = 0; c < cols; ++c) {
                if (c > 0)
                    require_punct(",");
                PolyParser pp(lex_, session_.algebra);
                m.at(r, c) = pp.expr();
            }
            require_punct("]");
        }
        require_punct(";");
        session_.matrices.emplace(name, std::move(m));
    }

    void stmt_presentation() {
        lex_.take();
        finalize_algebra();
        std::string name = require_ident().text;
        check_fresh(name);
        require_punct("=");
        if (!is_ident(lex_.peek(), "A"))
            lex_.error("expected 'A^s / Delta'");
        lex_.take();
        require_punct("^");
        int rank = require_nat();
        require_punct("/");
        MatrixA delta;
        Token t = lex_.peek();
        if (t.kind == Tok::number && t.text == "0") {
            lex_.take();
            delta = mat_zero(rank, 0);
        } else {
            Token mat = require_ident();
            auto it = session_.matrices.find(mat.text);
            if (it == session_.matrices.end())
                fail(ErrorCode::unknown_name, "matrix '" + mat.text + "' is not defined");
            delta = it->second;
        }
        bool complete = false;
        if (is_ident(lex_.peek(), "complete")) {
            lex_.take();
            complete = true;
        }
        require_punct(";");
        Presentation p =
            presentation_from_delta(session_.algebra, Side::left, rank, std::move(delta));
        p.complete = complete;
        session_.presentations.emplace(name, std::move(p));
    }

    Lexer lex_;
    Session session_;
    std::vector<std::string> names_;
    OrderSpec order_;
    AlgebraPtr scaffold_; // commutative carrier for relation right-hand sides
    std::vector<PendingRelation> rels_;
};

} // namespace

Session parse_session(const std::string& text) { return SessionParser(text).run(); }

Poly parse_poly_text(const AlgebraPtr& a, const std::string& text) {
    Lexer lex(text);
    PolyParser pp(lex, a);
    Poly p = pp.expr();
    if (lex.peek().kind != Tok::end)
        lex.error("trailing input after polynomial");
    return p;
}

} // namespace skewpbw
