#pragma once

#include "skewpbw/applications.hpp"
#include "skewpbw/syzygy.hpp"

#include <json.hpp>

namespace skewpbw {

enum class Format { text, json };

// Text forms parse back through the session grammar: terms in PBW order,
// exact rationals (never decimals), vectors as tuples, matrices as bracketed
// rows with an explicit shape line for empty ones.
std::string render_poly(const Algebra& a, const Poly& p);
std::string render_vector(const Algebra& a, const VectorA& v);
std::string render_matrix(const Algebra& a, const MatrixA& m);

// Exact JSON: term lists with numerator/denominator integer strings and
// exponent vectors.
nlohmann::json poly_json(const Algebra& a, const Poly& p);
nlohmann::json vector_json(const Algebra& a, const VectorA& v);
nlohmann::json matrix_json(const Algebra& a, const MatrixA& m);

nlohmann::json homology_json(const Algebra& a, const HomologyResult& h);
std::string render_homology(const Algebra& a, const HomologyResult& h);

} // namespace skewpbw
