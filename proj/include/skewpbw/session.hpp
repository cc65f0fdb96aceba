#pragma once

#include "skewpbw/homological.hpp"

#include <map>

namespace skewpbw {

// A parsed session file: one algebra plus named modules (generator columns),
// matrices, and power-user presentations.
struct Session {
    AlgebraPtr algebra;
    std::map<std::string, MatrixA> modules;
    std::map<std::string, MatrixA> matrices;
    std::map<std::string, Presentation> presentations;
};

// Statement syntax (semicolon-terminated, '#' comments):
//   vars x, y;
//   rel y*x = -1*x*y;                       (unlisted pairs commute)
//   order deglex(x > y);                    (deglex | lex | degrevlex)
//   morder TOP(e4 > e3 > e2 > e1);          (TOP | POT)
//   module M in A^4 = (1,0,1,0), (y,0,0,0);
//   matrix F in A^6x3 = [0, -y^2, y^3] [x, 0, x] ...;
//   presentation P = A^6 / F;               (or A^1 / 0 for no relations;
//                                            trailing 'complete' marks the
//                                            chain as a full resolution)
// Polynomial grammar: rationals, variable names, +, -, *, ^, parentheses;
// products are normalized to PBW form on load.
Session parse_session(const std::string& text);

Poly parse_poly_text(const AlgebraPtr& a, const std::string& text);

} // namespace skewpbw
