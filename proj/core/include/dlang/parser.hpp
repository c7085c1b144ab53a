#pragma once

#include <string>

#include "dlang/ast.hpp"

namespace dlang {

/// Parses a complete DLang program. `filename` is used only in diagnostics.
/// Throws ParseError with a 1-based line:column position on malformed input.
Program parse_program(const std::string& text, const std::string& filename = "<input>");

/// Parses a single type, e.g. "struct { y1: int(r1, {m1}) }".
TypePtr parse_type(const std::string& text);

/// Parses a single expression, e.g. "compute *x.y1 at m1".
ExprPtr parse_expr(const std::string& text);

} // namespace dlang
