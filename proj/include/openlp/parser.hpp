#pragma once

#include <string_view>

#include "openlp/syntax.hpp"

namespace openlp {

// Grammar (ASCII, '%' starts a line comment):
//   program   := (statement ".")*
//   statement := rule | directive
//   rule      := atom (":-" lit ("," lit)*)?
//   lit       := atom | "not" atom
//   atom      := name ("(" term ("," term)* ")")?
//   term      := name ("(" term ("," term)* ")")? | VARIABLE
//   directive := "#open" name "/" nat | "#fresh" name "/" nat
// Names start lowercase, variables start uppercase. "not", "and" and "or"
// are keywords and cannot be used as names. The reserved prefix "o_" is
// rejected. A predicate or functor used with two arities is an error.

/// Parses a plain program; directives are not allowed.
Program parse_program(std::string_view text);

/// Parses a program together with #fresh / #open directives.
/// Fresh symbols are verified absent from the program.
OpenProgram parse_open_program(std::string_view text);

// Query grammar: q := atom | "not" q | q "and" q | q "or" q | "(" q ")",
// "not" binding tightest, "and" over "or". All atoms must be ground.
Query parse_query(std::string_view text);

} // namespace openlp
