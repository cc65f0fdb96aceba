#pragma once

#include <stdexcept>
#include <string>

namespace skewpbw {

enum class ErrorCode {
    zero_constant,
    degree_violation,
    inconsistent_relations,
    order_incompatible,
    rank_mismatch,
    zero_vector,
    algebra_mismatch,
    shape_mismatch,
    not_centralizing,
    containment_violation,
    length_exceeded,
    syntax_error,
    unknown_variable,
    unknown_name,
    unknown_command,
    bad_argument,
};

const char* error_code_name(ErrorCode code);

class SkewError : public std::runtime_error {
  public:
    SkewError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw SkewError(code, message);
}

} // namespace skewpbw
