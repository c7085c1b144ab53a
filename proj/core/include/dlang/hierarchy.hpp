#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dlang/diag.hpp"

namespace dlang {

/// Identifier of a machine (a leaf of the hierarchy tree).
struct MachineId {
    std::string name;
    auto operator<=>(const MachineId&) const = default;
};

/// One of the alpha regions present on every machine, 1-based: r1..r_alpha.
struct RegionId {
    int index = 1;
    auto operator<=>(const RegionId&) const = default;
    std::string str() const { return "r" + std::to_string(index); }
};

/// Rooted ordered tree of machines. Interior nodes are unnamed grouping
/// nodes (their names are kept only for error messages); leaves are the
/// machines. Every machine carries the same region set r1..r_alpha.
///
/// Levels are counted from the leaves upward with the leaf level = 1, so a
/// machine's distance to itself is 1 and a locally allocated pointer has
/// width 1.
class MachineHierarchy {
public:
    struct Node {
        std::string name;
        std::vector<Node> children; // empty <=> machine leaf
    };

    MachineHierarchy(Node root, int region_count);

    int region_count() const { return region_count_; }
    const Node& root() const { return root_; }

    /// Machines in left-to-right leaf order.
    const std::vector<MachineId>& machines() const { return machines_; }
    const MachineId& first_machine() const { return machines_.front(); }
    bool has_machine(const MachineId& m) const;
    bool has_region(RegionId r) const { return r.index >= 1 && r.index <= region_count_; }

    /// Level of the lowest common ancestor of a and b; distance(m, m) = 1.
    int distance(const MachineId& a, const MachineId& b) const;

    /// Number of levels in the tree (level of the root).
    int depth() const;

private:
    Node root_;
    int region_count_;
    std::vector<MachineId> machines_;
};

/// Parses the hierarchy description format:
///   regions <alpha>; (root (m1) (m2))
/// A parenthesized node with no children is a machine; with children it is
/// a grouping node. Rejects duplicate machine names and alpha < 1.
MachineHierarchy parse_hierarchy(const std::string& text);

class Type; // syntax module

/// Resolves a pointer type against a hosting machine: the machine parameter
/// it targets and the pointer's width (the distance from `hosting`).
/// Throws HierarchyError if `pointer_type` is not a pointer type.
std::pair<MachineId, int> width_f(const MachineHierarchy& h, const MachineId& hosting,
                                  const Type& pointer_type);

} // namespace dlang
