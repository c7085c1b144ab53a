#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dlang/ast.hpp"
#include "dlang/hierarchy.hpp"
#include "dlang/slicer.hpp"
#include "dlang/typecheck.hpp"

namespace dlang {

using Int = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Values and stores
// ---------------------------------------------------------------------------

struct Value;

struct NullV {};

/// Marks data that was sliced away. Never appears in original-program runs;
/// in sliced runs it propagates through l-value paths and reads as 0 in
/// integer positions, so guards over foreign-region data stay executable.
struct AbsentV {};

/// A location: either a heap allocation or a variable cell (&x), optionally
/// refined by a field path into the addressed value. Sliced-run allocations
/// carry the region of the executing slice.
struct LocV {
    MachineId machine;
    std::variant<std::uint64_t, std::string> target; // allocation id | variable name
    std::vector<std::string> path;
    std::optional<RegionId> region;
};

struct StructV {
    std::vector<std::pair<std::string, Value>> fields;
};

struct Value {
    std::variant<Int, NullV, LocV, StructV, AbsentV> v;
};

struct Allocation {
    TypePtr type; // static type the allocation was created with
    Value value;
};

struct MachineStore {
    std::map<std::string, Value> vars;
    std::map<std::uint64_t, Allocation> heap;
};

/// Simulated world: every machine's private variables and heap, plus the
/// machine currently executing. Sliced runs and projections additionally
/// carry their coordinate.
struct WorldState {
    std::map<MachineId, MachineStore> machines;
    MachineId current;
    std::uint64_t next_alloc = 1;
    std::optional<SliceCoord> coord;
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class EvalErrorKind {
    FuelExhausted,
    NullDeref,
    DanglingDeref,
    DivisionByZero,
    ForeignRegion,
    AbsentStore,
    BadCast,
    Internal,
};

class EvalError : public Error {
public:
    EvalError(EvalErrorKind kind, Pos pos, const std::string& message)
        : Error(pos, message), kind_(kind) {}
    EvalErrorKind kind() const { return kind_; }

private:
    EvalErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Execution, projection, equivalence
// ---------------------------------------------------------------------------

/// Deterministic big-step run of a checked program. Declared variables are
/// zero-initialized on every machine; execution starts on the first machine
/// in hierarchy order and `compute ... at m` retargets it for its extent.
WorldState run_original(const CheckedProgram& p, const MachineHierarchy& h,
                        std::uint64_t fuel = 1'000'000);

/// Runs a slice (a program whose region-qualified variables all carry
/// coordinate c). All allocations are tagged with c's region and every store
/// is checked for region confinement.
WorldState run_slice(const CheckedProgram& slice, const SliceCoord& c,
                     const MachineHierarchy& h, std::uint64_t fuel = 1'000'000);

/// Heap-projection oracle: restricts a final original-program state to one
/// coordinate. Keeps integer leaves annotated with (c.region, M ∋ c.machine),
/// keeps struct shells and pointer links exactly where the static type's
/// slice is non-void, and drops everything else.
WorldState project(const CheckedProgram& p, const WorldState& s, const SliceCoord& c);

/// Deterministic text form of a state: machines in hierarchy order, sorted
/// variables, allocations renumbered by depth-first traversal from the
/// variable roots (unreachable allocations are not serialized).
std::string canonical_serialize(const WorldState& s, const MachineHierarchy& h);

/// State equivalence up to allocation-id renaming.
bool equivalent(const WorldState& a, const WorldState& b, const MachineHierarchy& h);

} // namespace dlang
