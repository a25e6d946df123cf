#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace openlp {

/// Diagnostic class of an error, also used as the CLI diagnostic code.
enum class ErrorCode {
    parse,    ///< input text violates the grammar or symbol rules
    scope,    ///< operation called outside its supported fragment
    capacity  ///< an enumeration or grounding cap was exceeded
};

const char* error_code_name(ErrorCode code);

struct Error : std::runtime_error {
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code(code) {}
    ErrorCode code;
};

/// Syntax or symbol error with a 1-based source position.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(ErrorCode::parse, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

struct ScopeError : Error {
    explicit ScopeError(const std::string& what) : Error(ErrorCode::scope, what) {}
};

struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error(ErrorCode::capacity, what) {}
};

} // namespace openlp
