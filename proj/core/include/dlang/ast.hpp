#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "dlang/diag.hpp"
#include "dlang/hierarchy.hpp"

namespace dlang {

class Type;
class LExpr;
class Expr;
class Stmt;
using TypePtr = std::shared_ptr<const Type>;
using LExprPtr = std::shared_ptr<const LExpr>;
using ExprPtr = std::shared_ptr<const Expr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// ---------------------------------------------------------------------------
// Types: int(r_i, M) | ptr<m> T | t | struct { y1: T1, ... }
// ---------------------------------------------------------------------------

/// Region-and-machines annotated integer. The machine set is kept sorted and
/// deduplicated so set-equal annotations compare and print identically.
struct IntAt {
    RegionId region;
    std::vector<MachineId> machines; // nonempty, sorted, unique
};

struct PtrTo {
    MachineId machine;
    TypePtr target;
};

struct NamedType {
    std::string name;
};

struct StructField {
    std::string label;
    TypePtr type;
};

/// struct{} is the language's void.
struct StructOf {
    std::vector<StructField> fields;
};

class Type {
public:
    using Node = std::variant<IntAt, PtrTo, NamedType, StructOf>;

    explicit Type(Node node, Pos pos = {}) : node_(std::move(node)), pos_(pos) {}
    const Node& node() const { return node_; }
    Pos pos() const { return pos_; }

    const IntAt* as_int() const { return std::get_if<IntAt>(&node_); }
    const PtrTo* as_ptr() const { return std::get_if<PtrTo>(&node_); }
    const NamedType* as_named() const { return std::get_if<NamedType>(&node_); }
    const StructOf* as_struct() const { return std::get_if<StructOf>(&node_); }

private:
    Node node_;
    Pos pos_;
};

TypePtr make_int(RegionId region, std::vector<MachineId> machines, Pos pos = {});
TypePtr make_ptr(MachineId machine, TypePtr target, Pos pos = {});
TypePtr make_named(std::string name, Pos pos = {});
TypePtr make_struct(std::vector<StructField> fields, Pos pos = {});
TypePtr void_type();

/// True iff t is struct{} (the void type).
bool is_void(const Type& t);

/// Position-insensitive structural equality (no alias expansion).
bool type_syntactic_equal(const Type& a, const Type& b);

// ---------------------------------------------------------------------------
// Left expressions: x | x.(r_i, m) | l.y | *e
// ---------------------------------------------------------------------------

struct VarRef {
    std::string name;
};

/// Region-qualified variable x.(r_i, m): the sliced form of a variable. The
/// checker types it exactly like x; the qualifier records a slice coordinate.
struct RegionVar {
    std::string name;
    RegionId region;
    MachineId machine;
};

struct FieldSel {
    LExprPtr base;
    std::string label;
};

struct DerefLV {
    ExprPtr addr;
};

class LExpr {
public:
    using Node = std::variant<VarRef, RegionVar, FieldSel, DerefLV>;

    explicit LExpr(Node node, Pos pos = {}) : node_(std::move(node)), pos_(pos) {}
    const Node& node() const { return node_; }
    Pos pos() const { return pos_; }

private:
    Node node_;
    Pos pos_;
};

LExprPtr make_var(std::string name, Pos pos = {});
LExprPtr make_region_var(std::string name, RegionId region, MachineId machine, Pos pos = {});
LExprPtr make_field(LExprPtr base, std::string label, Pos pos = {});
LExprPtr make_deref(ExprPtr addr, Pos pos = {});

// ---------------------------------------------------------------------------
// Expressions
// ---------------------------------------------------------------------------

enum class BinOp { Add, Sub, Mul, Div, Eq, Lt };

const char* binop_token(BinOp op);

struct LValExpr {
    LExprPtr lval;
};

/// Integer constant. Checked against whatever integer annotation the context
/// supplies; in an unconstrained position it defaults to int(r1, {ctx}).
struct IntLit {
    std::int64_t value = 0;
};

struct BinExpr {
    BinOp op;
    ExprPtr lhs;
    ExprPtr rhs;
};

struct AddrOf {
    LExprPtr lval;
};

struct NewExpr {
    TypePtr type;
};

struct ModifyW {
    ExprPtr ptr;
    MachineId machine;
};

struct ComputeExpr {
    ExprPtr body;
    MachineId machine;
};

/// cast<ptr<m> T -> int(r_i, M)>(e)
struct CastPtrInt {
    TypePtr src; // always PtrTo
    TypePtr dst; // always IntAt
    ExprPtr value;
};

/// cast<int(r_j, Mj) -> int(r_i, Mi)>(e)
struct CastIntInt {
    TypePtr src; // always IntAt
    TypePtr dst; // always IntAt
    ExprPtr value;
};

class Expr {
public:
    using Node = std::variant<LValExpr, IntLit, BinExpr, AddrOf, NewExpr, ModifyW, ComputeExpr,
                              CastPtrInt, CastIntInt>;

    explicit Expr(Node node, Pos pos = {}) : node_(std::move(node)), pos_(pos) {}
    const Node& node() const { return node_; }
    Pos pos() const { return pos_; }

private:
    Node node_;
    Pos pos_;
};

ExprPtr make_lval(LExprPtr lval, Pos pos = {});
ExprPtr make_lit(std::int64_t value, Pos pos = {});
ExprPtr make_binop(BinOp op, ExprPtr lhs, ExprPtr rhs, Pos pos = {});
ExprPtr make_addrof(LExprPtr lval, Pos pos = {});
ExprPtr make_new(TypePtr type, Pos pos = {});
ExprPtr make_modify_w(ExprPtr ptr, MachineId machine, Pos pos = {});
ExprPtr make_compute_expr(ExprPtr body, MachineId machine, Pos pos = {});
ExprPtr make_cast_ptr_int(TypePtr src, TypePtr dst, ExprPtr value, Pos pos = {});
ExprPtr make_cast_int_int(TypePtr src, TypePtr dst, ExprPtr value, Pos pos = {});

// ---------------------------------------------------------------------------
// Statements
// ---------------------------------------------------------------------------

struct SkipStmt {};

struct AssignStmt {
    LExprPtr lhs;
    ExprPtr rhs;
};

struct ComputeStmt {
    StmtPtr body;
    MachineId machine;
};

struct SeqStmt {
    StmtPtr first;
    StmtPtr second;
};

struct IfStmt {
    ExprPtr cond;
    StmtPtr then_branch;
    StmtPtr else_branch;
};

struct WhileStmt {
    ExprPtr cond;
    StmtPtr body;
};

class Stmt {
public:
    using Node = std::variant<SkipStmt, AssignStmt, ComputeStmt, SeqStmt, IfStmt, WhileStmt>;

    explicit Stmt(Node node, Pos pos = {}) : node_(std::move(node)), pos_(pos) {}
    const Node& node() const { return node_; }
    Pos pos() const { return pos_; }

private:
    Node node_;
    Pos pos_;
};

StmtPtr make_skip(Pos pos = {});
StmtPtr make_assign(LExprPtr lhs, ExprPtr rhs, Pos pos = {});
StmtPtr make_compute_stmt(StmtPtr body, MachineId machine, Pos pos = {});
StmtPtr make_seq(StmtPtr first, StmtPtr second, Pos pos = {});
StmtPtr make_if(ExprPtr cond, StmtPtr then_branch, StmtPtr else_branch, Pos pos = {});
StmtPtr make_while(ExprPtr cond, StmtPtr body, Pos pos = {});

// ---------------------------------------------------------------------------
// Programs: type definitions, a variable preamble, one statement body
// ---------------------------------------------------------------------------

struct TypeDef {
    std::string name;
    TypePtr body;
    Pos pos;
};

struct VarDecl {
    std::string name;
    TypePtr type;
    Pos pos;
};

struct Program {
    std::vector<TypeDef> defs;
    std::vector<VarDecl> vars;
    StmtPtr body;
};

/// Structural equality ignoring source positions; statement sequences are
/// compared after flattening (sequencing is associative).
bool ast_equal(const Program& a, const Program& b);
bool expr_equal(const Expr& a, const Expr& b);
bool lexpr_equal(const LExpr& a, const LExpr& b);
bool stmt_equal(const Stmt& a, const Stmt& b);

} // namespace dlang
