#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlang/ast.hpp"
#include "dlang/hierarchy.hpp"
#include "dlang/typecheck.hpp"

namespace dlang {

/// The (machine, region) pair every slicing judgment is indexed by.
struct SliceCoord {
    MachineId machine;
    RegionId region;
    auto operator<=>(const SliceCoord&) const = default;
    std::string str() const { return machine.name + " " + region.str(); }
};

/// Per-coordinate table mapping each defined type name to its sliced name,
/// or nullopt when the definition's body slices to void there.
using SlicedDefTable = std::map<std::string, std::optional<std::string>>;

/// t2 at (m1, r1) -> "t2@m1@r1". Idempotent: a name already carrying this
/// coordinate's suffix is returned unchanged, so re-slicing at the same
/// coordinate is the identity.
std::string mangle_name(const std::string& name, const SliceCoord& c);

/// True iff the slice of t at c is void: no integer annotated with
/// (c.region, M ∋ c.machine) is reachable from t.
bool slices_to_void(const TypeContext& ctx, const Type& t, const SliceCoord& c);

/// Builds the def table for one coordinate.
SlicedDefTable build_def_table(const TypeContext& ctx, const std::vector<TypeDef>& defs,
                               const SliceCoord& c);

/// Type slicing: integers survive only at their own (machine, region) pair,
/// pointers vanish exactly when their target does, structs keep the
/// surviving fields in order, and named types map through the def table.
TypePtr slice_type(const TypeContext& ctx, const TypePtr& t, const SliceCoord& c,
                   const SlicedDefTable& tbl);

/// Definition slicing over all regions of one machine: each definition turns
/// into up to alpha definitions, one per region with a non-void slice.
std::pair<std::vector<TypeDef>, std::map<RegionId, SlicedDefTable>>
slice_defs(const TypeContext& ctx, const std::vector<TypeDef>& defs, const MachineId& m,
           int region_count);

/// Left-expression slicing: variables become region-qualified, field
/// selection and dereference recurse. Already-qualified variables pass
/// through unchanged.
LExprPtr slice_lexpr(const LExprPtr& l, const SliceCoord& c);

/// Expression slicing. Type annotations carried by `new` and by the pointer
/// cast's source are sliced; integer cast annotations and the machine
/// parameters of modify_w / compute-at pass through unchanged.
/// Throws SliceError when a `new` type slices to void.
ExprPtr slice_expr(const TypeContext& ctx, const ExprPtr& e, const SliceCoord& c,
                   const SlicedDefTable& tbl);

/// Statement slicing: an assignment whose left-hand side's static type
/// slices to void becomes skip; everything else recurses structurally.
StmtPtr slice_stmt(const TypeContext& ctx, const StmtPtr& s, const SliceCoord& c,
                   const SlicedDefTable& tbl, const MachineId& exec);

/// Whole-program slice at one coordinate: the coordinate's definitions, the
/// variable preamble with sliced types (void-typed variables dropped), and
/// the sliced body.
Program slice_program(const CheckedProgram& p, const SliceCoord& c);

/// One slice per (machine, region) coordinate.
std::map<SliceCoord, Program> slice_all(const CheckedProgram& p, const MachineHierarchy& h);

/// All coordinates of a hierarchy in (machine, region) order.
std::vector<SliceCoord> all_coords(const MachineHierarchy& h);

/// Verifies that a sliced program mentions no region-qualified variable and
/// no mangled type name of a foreign coordinate. Throws SliceError.
void assert_region_confined(const Program& p, const SliceCoord& c);

} // namespace dlang
