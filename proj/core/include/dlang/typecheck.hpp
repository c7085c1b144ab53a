#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlang/ast.hpp"
#include "dlang/hierarchy.hpp"

namespace dlang {

/// The map from variables and type names to types.
struct TypeContext {
    std::map<std::string, TypePtr> vars;
    std::map<std::string, TypePtr> type_names;

    const TypePtr* lookup_var(const std::string& name) const;
    const TypePtr* lookup_type(const std::string& name) const;
};

struct TypeError {
    Pos pos;
    std::string message;
};

/// Thrown by the judgment functions; check_program collects these into a
/// diagnostic list instead of unwinding.
class TypeCheckError : public Error {
public:
    using Error::Error;
};

/// A type-checked program together with the context it was checked under.
struct CheckedProgram {
    Program program;
    TypeContext ctx;
};

struct CheckResult {
    bool ok = false;
    std::vector<TypeError> errors;
    CheckedProgram checked; // meaningful only when ok
};

/// Width subtyping on structure types: `sub` is a subtype of `super` iff both
/// are structs and every field of `super` occurs in `sub` with an equal type.
/// Non-struct types are subtypes only of themselves.
bool subtype(const TypeContext& ctx, const Type& sub, const Type& super);

/// Equality with transparent aliases (equi-recursive: named types are
/// compared coinductively, so recursive definitions terminate).
bool type_equal(const TypeContext& ctx, const Type& a, const Type& b);

/// Resolves alias chains until the head constructor is not a named type.
TypePtr expand_head(const TypeContext& ctx, TypePtr t);

/// True iff an integer annotation syntactically equal to `target` occurs in
/// `t` or in any type reachable from it by struct-field descent, alias
/// expansion, or pointer-target descent. Terminates on cyclic definitions.
bool reachable_int(const TypeContext& ctx, const Type& t, const IntAt& target);

/// Type of a left expression under the given executing-machine context.
/// Throws TypeCheckError on failure.
TypePtr type_of_lexpr(const TypeContext& ctx, const LExpr& l, const MachineId& exec);

/// Synthesizes the type of an expression. Bare integer literals synthesize
/// int(r1, {exec}); use check_expr where the context dictates the type.
TypePtr type_of_expr(const TypeContext& ctx, const Expr& e, const MachineId& exec);

/// Checks e against an expected type: literals take any integer annotation,
/// new/& accept any machine parameter, and struct subsumption applies.
void check_expr(const TypeContext& ctx, const Expr& e, const Type& expected,
                const MachineId& exec);

/// Definition judgment. Requires ctx.type_names to be pre-populated.
void check_defs(const TypeContext& ctx, const std::vector<TypeDef>& defs);

/// Statement judgment under an executing machine.
void check_stmt(const TypeContext& ctx, const Stmt& s, const MachineId& exec);

/// Whole-program check: builds the initial environment from the definitions
/// and the variable preamble, validates every machine/region annotation
/// against the hierarchy, rejects alias cycles that do not pass through a
/// pointer, then checks definitions and body. Collects all diagnostics.
CheckResult check_program(const Program& p, const MachineHierarchy& h);

} // namespace dlang
