#pragma once

#include <string>

#include "dlang/ast.hpp"

namespace dlang {

/// Printers emit concrete syntax that parses back to an ast_equal value.
std::string pretty(const Type& t);
std::string pretty(const LExpr& l);
std::string pretty(const Expr& e);
std::string pretty(const Stmt& s);
std::string pretty(const Program& p);

} // namespace dlang
