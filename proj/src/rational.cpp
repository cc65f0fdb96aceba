#include "skewpbw/rational.hpp"

#include "skewpbw/error.hpp"

namespace skewpbw {

Rational rational_from_string(const std::string& text) {
    try {
        Rational r(text);
        r.canonicalize();
        if (r.get_den() == 0)
            fail(ErrorCode::syntax_error, "zero denominator in rational '" + text + "'");
        return r;
    } catch (const std::invalid_argument&) {
        fail(ErrorCode::syntax_error, "bad rational literal '" + text + "'");
    }
}

std::string to_string(const Rational& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::zero_constant: return "ZeroConstant";
    case ErrorCode::degree_violation: return "DegreeViolation";
    case ErrorCode::inconsistent_relations: return "InconsistentRelations";
    case ErrorCode::order_incompatible: return "OrderIncompatible";
    case ErrorCode::rank_mismatch: return "RankMismatch";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::algebra_mismatch: return "AlgebraMismatch";
    case ErrorCode::shape_mismatch: return "ShapeMismatch";
    case ErrorCode::not_centralizing: return "NotCentralizing";
    case ErrorCode::containment_violation: return "ContainmentViolation";
    case ErrorCode::length_exceeded: return "LengthExceeded";
    case ErrorCode::syntax_error: return "SyntaxError";
    case ErrorCode::unknown_variable: return "UnknownVariable";
    case ErrorCode::unknown_name: return "UnknownName";
    case ErrorCode::unknown_command: return "UnknownCommand";
    case ErrorCode::bad_argument: return "BadArgument";
    }
    return "Error";
}

} // namespace skewpbw
